// Ordered set of algebra generators (a_1^2, S_0, u, ...).  Generator names
// may contain '_' and '^'; parsers resolve them by longest match against the
// declared set.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpencil/common.hpp"

namespace qpencil {

class GenSet {
 public:
  GenSet() = default;
  explicit GenSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
      require(!names_[i].empty(), "generator name must be nonempty");
      for (size_t j = i + 1; j < names_.size(); ++j)
        require(names_[i] != names_[j], "duplicate generator name: " + names_[i]);
    }
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  int find(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }
  size_t index(const std::string& n) const {
    int i = find(n);
    require(i >= 0, "unknown generator: " + n);
    return static_cast<size_t>(i);
  }

  bool operator==(const GenSet& o) const { return names_ == o.names_; }
  bool operator!=(const GenSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

using GenSetPtr = std::shared_ptr<const GenSet>;

inline GenSetPtr make_gens(std::vector<std::string> names) {
  return std::make_shared<const GenSet>(std::move(names));
}

// Generators a_i^j for an n-by-n matrix of coordinates, rows outer:
// a_1^1, a_1^2, ..., a_1^n, a_2^1, ...
GenSetPtr matrix_gens(int n, const std::string& letter = "a");

inline void check_same_gens(const GenSetPtr& a, const GenSetPtr& b) {
  if (a == b) return;
  require(a && b && *a == *b, "generator set mismatch");
}

}  // namespace qpencil
