// Finite-dimensional Lie algebra data (structure constants over exact
// scalars), the standard skew solution candidate built from root-vector
// pairs, and the tensor-cube defect of the classical triangle identity
// together with its alternation/invariance certificates.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpencil/bracket.hpp"
#include "qpencil/gens.hpp"
#include "qpencil/linalg.hpp"

namespace qpencil {

class LieData {
 public:
  // c[i][j] holds the coordinates of [x_i, x_j] over the basis.  Checks
  // antisymmetry and the Jacobi identity at construction.  root_pairs lists
  // (raising, lowering) index pairs used by standard_r().
  LieData(GenSetPtr basis, ParamSetPtr ps,
          std::vector<std::vector<std::vector<Scalar>>> c,
          std::vector<std::pair<size_t, size_t>> root_pairs = {});

  const GenSetPtr& basis() const { return basis_; }
  const ParamSetPtr& params() const { return ps_; }
  size_t dim() const { return basis_->size(); }
  const std::vector<Scalar>& bracket(size_t i, size_t j) const;
  std::vector<Scalar> bracket_vec(const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& y) const;
  // Adjoint operator of basis element i.
  LinOp ad(size_t i) const;
  const std::vector<std::pair<size_t, size_t>>& root_pairs() const {
    return root_pairs_;
  }
  // (1/2) sum over root pairs of  X (x) Y - Y (x) X,  as a vector over the
  // tensor-square basis (index a*dim+b).
  SparseVec standard_r() const;

 private:
  GenSetPtr basis_;
  ParamSetPtr ps_;
  std::vector<std::vector<std::vector<Scalar>>> c_;
  std::vector<std::pair<size_t, size_t>> root_pairs_;
};

// Three-dimensional simple algebra, basis {H, X, Y}.
LieData sl2_lie(const ParamSetPtr& ps);
// Traceless 3x3 matrices, basis {H1, H2, E12, E13, E23, F21, F31, F32};
// structure constants are derived from matrix commutators, not transcribed.
LieData sl3_lie(const ParamSetPtr& ps);

// Defect of the classical triangle identity
//   [r12, r13] + [r12, r23] + [r13, r23]
// for r given over the tensor-square basis; the defect lives in the tensor
// cube (index (a*dim + b)*dim + c).
struct CybeReport {
  SparseVec defect;
  bool zero = false;
  bool alternating = false;  // defect is fully antisymmetric
  bool invariant = false;    // annihilated by every diagonal adjoint action
};
CybeReport cybe_defect(const LieData& L, const SparseVec& r);

// Quadratic sign-bracket sanity checks on the three-dimensional algebra:
// the Jacobiator of the quadratic bracket and the brackets against the
// invariant quadric all lie in the ideal generated by that quadric, while a
// non-invariant control quadratic escapes its own ideal.
struct OrbitCheckReport {
  bool jacobiator_in_ideal = false;
  bool quadric_central = false;
  bool control_escapes = false;
  std::string control_witness;
};
OrbitCheckReport rmatrix_bracket_orbit_check(const ParamSetPtr& ps);

}  // namespace qpencil
