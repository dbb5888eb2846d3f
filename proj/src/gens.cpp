#include "qpencil/gens.hpp"

namespace qpencil {

GenSetPtr matrix_gens(int n, const std::string& letter) {
  require(n >= 1, "matrix size must be positive");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      names.push_back(letter + "_" + std::to_string(i) + "^" + std::to_string(j));
  return make_gens(std::move(names));
}

}  // namespace qpencil
