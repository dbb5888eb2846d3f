// Ordered set of commuting formal parameters (q, h, M, c0, J12, ...).
// One parameter may be flagged as a formal imaginary unit: its square is
// reduced to -1 during polynomial normalization.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpencil/common.hpp"

namespace qpencil {

class ParamSet {
 public:
  ParamSet() = default;
  explicit ParamSet(std::vector<std::string> names, const std::string& imag_name = "")
      : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
      require(!names_[i].empty(), "parameter name must be nonempty");
      for (size_t j = i + 1; j < names_.size(); ++j)
        require(names_[i] != names_[j], "duplicate parameter name: " + names_[i]);
    }
    if (!imag_name.empty()) {
      imag_ = find(imag_name);
      require(imag_ >= 0, "imaginary parameter not in set: " + imag_name);
    }
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int imag_index() const { return imag_; }

  int find(const std::string& n) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }
  size_t index(const std::string& n) const {
    int i = find(n);
    require(i >= 0, "unknown parameter: " + n);
    return static_cast<size_t>(i);
  }

  bool operator==(const ParamSet& o) const {
    return names_ == o.names_ && imag_ == o.imag_;
  }
  bool operator!=(const ParamSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  int imag_ = -1;
};

using ParamSetPtr = std::shared_ptr<const ParamSet>;

inline ParamSetPtr make_params(std::vector<std::string> names,
                               const std::string& imag_name = "") {
  return std::make_shared<const ParamSet>(std::move(names), imag_name);
}

// Two scalars may interoperate iff their param sets agree (pointer or value).
inline void check_same(const ParamSetPtr& a, const ParamSetPtr& b) {
  if (a == b) return;
  require(a && b && *a == *b, "parameter set mismatch");
}

}  // namespace qpencil
