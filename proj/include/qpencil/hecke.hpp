// Deformed transposition operators on tensor squares, the braid and
// quadratic identities they satisfy, the induced operator on matrix
// coordinates, and the catalog of quadratic relation families attached to
// them.
#pragma once

#include <string>

#include "qpencil/linalg.hpp"
#include "qpencil/relations.hpp"

namespace qpencil {

// Deformed flip on V (x) V (dim V = n), index (i,j) -> i*n + j:
//   e_i (x) e_i -> q e_i (x) e_i
//   e_i (x) e_j -> e_j (x) e_i + (q - 1/q) e_i (x) e_j   (i < j)
//   e_i (x) e_j -> e_j (x) e_i                           (i > j)
LinOp hecke_s(int n, const ParamSetPtr& ps);

// Plain flip x (x) y -> y (x) x on the tensor square of an m-dim space.
LinOp flip_op(int m, const ParamSetPtr& ps);

// Braid identity S12 S23 S12 = S23 S12 S23 on the tensor cube.  The string
// form returns "" when the identity holds and otherwise describes the first
// differing matrix entry.
bool check_qybe(const LinOp& s);
std::string qybe_violation(const LinOp& s);

// Quadratic identity (S - q)(S + 1/q) = 0.
bool check_hecke(const LinOp& s, const Scalar& q);

// Operator induced by S on W (x) W, W = span of the n^2 matrix coordinates
// a_i^k (index i*n + k): straight slots transform by S, dual slots by the
// inverse transpose,
//   a_i^k (x) a_j^l -> S^{mn}_{ij} (S^{-1})^{kl}_{pq}  a_m^p (x) a_n^q.
LinOp s_w(const LinOp& s);

// Comparison of the image/kernel of (S_W - id) for S = hecke_s(n) against
// the explicit antisymmetrized/symmetrized relation catalogs.
struct SpanReport {
  int n = 0;
  std::string mode;            // "symbolic" or "q=<value>"
  size_t dim_minus = 0;        // dim of the image of S_W - id
  size_t dim_plus = 0;         // dim of the kernel of S_W - id
  bool direct_sum = false;     // dims add up to n^4 and intersection is 0
  bool minus_matches = false;  // image equals the span of i_minus(n)
  bool plus_matches = false;   // kernel equals the span of i_plus(n)
  Subspace minus;              // the image subspace itself
  Subspace plus;               // the kernel subspace itself
};
SpanReport iq_spans(int n, const ParamSetPtr& ps);
SpanReport iq_spans_at(int n, const ParamSetPtr& ps, const Rat& q_value);

// Quadratic relation families on the matrix coordinates a_i^j (generators
// from matrix_gens(n)) and on the elliptic coordinates S0..S3.
RelationFamily i_minus_family(int n, const ParamSetPtr& ps);
RelationFamily i_plus_family(int n, const ParamSetPtr& ps);
// i_minus with h-linear tails (degenerates to i_minus at h = 0).
RelationFamily j_hq_family(int n, const ParamSetPtr& ps);
// Six homogeneous relations in S0..S3 with coefficients in q-free
// parameters J12, J23, J31 and the formal imaginary unit.
RelationFamily elliptic_quantum_family(const ParamSetPtr& ps);
// Entries of S u1 S u1 - u1 S u1 S (u1 = u (x) 1, u the n-by-n coordinate
// matrix), nonzero entries reduced to a linearly independent list.
RelationFamily reflection_family(const LinOp& s, int n, const ParamSetPtr& ps);
// Parse a family name: "i_minus(2)", "i_plus(3)", "j_hq(2)",
// "elliptic_quantum", "re(2)" (reflection family of hecke_s(2)).
RelationFamily relation_catalog(const std::string& name, const ParamSetPtr& ps);

// The span of the quantum elliptic relations equals the graph span
// { x(x)y - y(x)x + i * sym({x,y}) } of the classical elliptic bracket.
bool elliptic_quantum_matches_classical(const ParamSetPtr& ps);

// Sparse triplet export: "dims: <out> <in>" header, one "row col entry"
// line per nonzero entry, column-major order.
void export_operator_triplets(const LinOp& op, const std::string& path);

}  // namespace qpencil
