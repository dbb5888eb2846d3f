// Antilinear star structures on the deformed bracket: a candidate matrix T
// defines z -> T conj(z) (conjugation negating the formal imaginary unit),
// which must be an involution and anti-multiplicative on the bracket,
//   (T conj) [x, y] = -[T conj(x), T conj(y)].
// This file provides the symbolic check, the classification over the sign
// diagonals, an exact elimination certificate that the full real 3x3 scan
// has exactly two solutions at generic rational parameter values, and the
// structure report for the odd part ({ z : z* = -z }).
#pragma once

#include <string>
#include <vector>

#include "qpencil/braided.hpp"
#include "qpencil/groebner.hpp"

namespace qpencil {

// Entrywise negation of the formal imaginary unit.
SparseVec sv_conj(const SparseVec& v);
LinOp op_conj(const LinOp& op);

// One candidate T against a bracket B (9 -> 3).  `compatible` requires
//   T o conj(B) = -B o (T (x) T),
// which on basis pairs is exactly anti-multiplicativity.  On failure,
// `violation` names the first generator pair whose bracket breaks it.
struct ConjugationReport {
  bool real = false;        // no imaginary entries in T
  bool involutive = false;  // T o T = id
  bool compatible = false;  // anti-multiplicative on the bracket
  std::string violation;    // e.g. "(u, v)" when !compatible
  bool ok() const { return real && involutive && compatible; }
};
ConjugationReport conjugation_check(const LinOp& bracket, const LinOp& t);

// All eight sign-diagonal candidates diag(+-1,+-1,+-1) that pass the check,
// in lexicographic sign order (-1 before +1, first entry most significant).
// For generic parameters exactly two survive: -id and diag(1,-1,1).
std::vector<LinOp> classify_diagonal_conjugations(const LinOp& bracket);

// Exact elimination certificate for the unrestricted real 3x3 scan at one
// rational value q0 of the deformation parameter (scale fixed to M = 1).
// The 9 involution conditions and 27 compatibility conditions are quadratic
// polynomials in the matrix entries t11..t33; their reduced elimination
// basis is computed, and `two_point_certified` holds iff the nine
// polynomials cutting out exactly { -id, diag(1,-1,1) },
//   t12, t13, t21, t23, t31, t32, t22 + 1, t33 - t11, t11^2 - 1,
// all reduce to zero against it (so every solution satisfies them), with
// both points verified directly as solutions.  Nonzero remainders are
// returned in `residuals` for inspection at degenerate parameter values.
struct ConjugationScan {
  Rat q;
  size_t basis_size = 0;
  bool collapsed = false;  // basis contains a nonzero constant: no solutions
  bool two_point_certified = false;
  std::vector<std::string> residuals;
};
ConjugationScan conjugation_scan_at(const QLieBracket& br, const Rat& q0);

// Structure of the odd part for a compatible involution: odd elements are
// real combinations of the (-1)-eigenvectors of T and the formal imaginary
// unit times the (+1)-eigenvectors.  Checks that the bracket of two odd
// elements is odd and that i times the bracket of two even elements is even.
struct OddSubalgebraReport {
  std::vector<SparseVec> odd_basis;
  bool odd_closed = false;
  bool even_closed_under_i = false;
};
OddSubalgebraReport odd_subalgebra_check(const LinOp& bracket, const LinOp& t,
                                         const ParamSetPtr& ps);

}  // namespace qpencil
