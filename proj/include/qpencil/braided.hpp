// Weight-basis representation layer for the rank-1 quantum algebra:
// irreducible modules, tensor and endomorphism actions via the coproduct
// and antipode, isotypic decomposition by highest-weight search, the
// deformed Lie bracket on a 3-dim module with its printed multiplication
// table, almost representations with their scale factor, braided module
// structures with Casimir eigenvalues, and quantum traces.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpencil/quotient.hpp"

namespace qpencil {

// The q-integer (q^m - q^-m)/(q - q^-1), expanded as a Laurent polynomial.
Scalar q_int(int m, const ParamSetPtr& ps);

// Irreducible module of dimension k+1 in the weight basis e_0..e_k:
//   K e_i = q^(k-2i) e_i,   E e_i = [i] e_{i-1},   F e_i = [k-i] e_{i+1}.
// The defining relations (group-like conjugations and the E,F commutator)
// are verified at construction.
struct WeightRep {
  ParamSetPtr ps;
  int k = 0;
  uint32_t dim = 0;
  LinOp e, f, kk, kinv;
};
WeightRep irrep(int k, const ParamSetPtr& ps);

// Generator actions on one module; combined for tensor products via
//   D(E) = E (x) 1 + K (x) E,  D(F) = F (x) K^{-1} + 1 (x) F,
//   D(K) = K (x) K,
// and on End(U) via  a . M = rho(a_1) M rho(antipode(a_2)).
struct ModuleOps {
  LinOp e, f, kk, kinv;
  uint32_t dim() const { return e.dim_in(); }
};
ModuleOps rep_ops(const WeightRep& r);
ModuleOps tensor_ops(const ModuleOps& a, const ModuleOps& b);
ModuleOps end_ops(const WeightRep& r);

// Transport of actions through an invertible change of basis t (columns =
// new basis vectors in old coordinates).
ModuleOps transported_ops(const ModuleOps& ops, const LinOp& t);

// Isotypic pieces found as joint kernels of the raising action and the
// group-like eigenvalue constraint; weight = the K-exponent of the highest
// vector.  Completeness (dimensions summing to the whole space) is checked.
struct WeightComponent {
  int weight = 0;
  size_t multiplicity = 0;
  Subspace highest;  // highest-weight vectors of this eigenvalue
};
std::vector<WeightComponent> decompose(const ModuleOps& ops, int max_weight,
                                       const ParamSetPtr& ps);
// (weight, multiplicity) pairs for End of an irreducible module.
std::vector<std::pair<int, size_t>> decompose_end(const WeightRep& r);

// ---------------------------------------------------------------------------
// The deformed Lie bracket on the 3-dim module, in the printed basis
// {u, v, w}:
//   [u,u]=0        [u,v]=-q^2 M u        [u,w]=(q+q^-1)^-1 M v
//   [v,u]=M u      [v,v]=(1-q^2) M v     [v,w]=-q^2 M w
//   [w,u]=-(q+q^-1)^-1 M v               [w,v]=M w           [w,w]=0
// Constructed from scratch (projection onto the skew-type component of the
// tensor square composed with an equivariant isomorphism), then matched
// against the table after one recorded diagonal change of basis; any entry
// mismatch is a hard error.

struct QLieBracket {
  ParamSetPtr ps;
  GenSetPtr gens;       // u, v, w
  LinOp bracket;        // V (x) V -> V in (u,v,w) coordinates, M included
  LinOp to_module;      // columns: u, v, w in weight-basis coordinates
  LinOp from_module;    // inverse change of basis
  ModuleOps ops;        // generator actions in (u,v,w) coordinates
  Subspace v_minus;     // skew-type component of the tensor square
  Subspace v_two_alpha; // top component of the tensor square
  SparseVec casimir;    // invariant vector, q=1-normalized, (u,v,w) coords
  std::string rescaling;  // the recorded change of basis, printable
};
QLieBracket q_lie_bracket(const ParamSetPtr& ps);

// ---------------------------------------------------------------------------
// Almost representations and braided structures on irreducible modules.

struct AlmostRep {
  WeightRep rep;
  bool degenerate = false;      // 1-dim module: only the zero morphism
  std::vector<LinOp> images;    // images of u, v, w in End
  Scalar nu;                    // composition factor on the skew component
};
// The unique-up-to-scale equivariant embedding of the 3-dim module into
// End(U), with the factor nu extracted from the product of images on the
// skew-type component; equivariance and the component conditions are
// verified, and a failing multiplicity precondition is a hard error naming
// the offending weight.
AlmostRep almost_representation(const QLieBracket& br, const WeightRep& r);

struct BraidedStructure {
  AlmostRep rho;  // images already rescaled by 1/nu
  Scalar c0;      // scalar of the Casimir image under the rescaled map
};
// Rescales the almost representation so the quadratic-linear relations of
// the bracket's enveloping algebra (unit shift h = 1) are annihilated, and
// extracts the Casimir scalar; a non-scalar Casimir image is a hard error.
BraidedStructure braided_structure(const QLieBracket& br, const WeightRep& r);

// Trace weighted by the inverse group-like element; invariant under the
// End action (counit values), with quantum dimension q + q^-1 in dim 2.
Scalar quantum_trace(const WeightRep& r, const LinOp& m);
Scalar quantum_dimension(const WeightRep& r);

// ---------------------------------------------------------------------------
// Quadratic-linear relation families generated by the bracket data.

// Enveloping-type family: x y - (x y flipped through the skew component)
// shifted by h times the bracket, i.e. the span Im(id - h [,]_q) applied to
// the skew component, over generators u, v, w.   Filtered, flat for this
// 3-dim bracket (classical reference 1, 4, 10, 20).
RelationFamily sl2_enveloping_family(const QLieBracket& br);

// The enveloping family extended by the Casimir level relation C - c0
// (classical reference 1, 4, 9, 16 -- the quadric-cone slice counts).
RelationFamily sl2_casimir_family(const QLieBracket& br, const Scalar& c0);

// Compatibility data for pbw_nu_check: I = skew component (+) Casimir line,
// nu1 = h [,]_q vanishing off the skew component, nu0 = c0 on the Casimir
// line vanishing on the skew component.
NuData sl2_nu_data(const QLieBracket& br);

}  // namespace qpencil
