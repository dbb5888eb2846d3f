// Buchberger elimination for commutative polynomial systems over the exact
// scalar field, in the graded-lex term order of CPoly.  Intended for the
// small zero-dimensional systems arising from structure-matrix scans.
#pragma once

#include <vector>

#include "qpencil/cpoly.hpp"

namespace qpencil {

// Remainder of p under multivariate division by the list (full normal form:
// no term of the result is divisible by any leading monomial of the list).
CPoly gb_reduce(const CPoly& p, const std::vector<CPoly>& basis);

// A reduced Groebner basis of the ideal generated by the inputs: pairwise
// reduced, leading coefficients 1, sorted by leading monomial.  Throws if
// the computation exceeds a generous pair budget.
std::vector<CPoly> groebner_basis(std::vector<CPoly> gens);

// Ideal membership against a Groebner basis.
bool gb_contains(const std::vector<CPoly>& basis, const CPoly& p);

}  // namespace qpencil
