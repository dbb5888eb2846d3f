// Quotients of free algebras by quadratic (graded or filtered) relation
// families: truncated ideal spans, per-degree dimension tables, flatness
// verdicts with witnesses, an independent commutative-elimination oracle
// for classical references, and the tensor-level compatibility conditions
// for (nu0, nu1) quotient data.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpencil/relations.hpp"

namespace qpencil {

// Column layout for the filtered ambient (all words of degree <= D):
// degree-D block first, then D-1, ..., the constant word last, each block
// in word_rank order.  A column suffix then spans a filtration level, so
// echelon rows supported in the suffix count ideal elements of that level.
struct FilteredLayout {
  uint32_t ngens = 0;
  int max_degree = 0;
  std::vector<uint32_t> offset;  // offset[e] = start of the degree-e block
  uint32_t ncols = 0;

  uint32_t column(const Word& w) const;
  uint32_t level_start(int d) const {
    return offset[static_cast<size_t>(d)];
  }
  // Inverse of column(): the word living at a column.
  Word word_at(uint32_t col) const;
};
FilteredLayout filtered_layout(uint32_t ngens, int max_degree);
SparseVec filtered_vec(const NCPoly& p, const FilteredLayout& lay);
NCPoly filtered_poly(const SparseVec& v, const FilteredLayout& lay,
                     const GenSetPtr& gens, const ParamSetPtr& ps);

// Span of { x * r * y : r relation, deg(x r y) <= D } in the filtered
// ambient over the family's generators.
Subspace ideal_truncation(const RelationFamily& f, int D);

// Parameter specialization point, applied to every relation coefficient.
using ParamPoint = std::vector<std::pair<std::string, Rat>>;
std::string param_point_label(const ParamPoint& at);
RelationFamily specialized(const RelationFamily& f, const ParamPoint& at);

struct HilbertResult {
  std::string family;
  FamilyKind kind = FamilyKind::graded;
  std::string mode;          // "symbolic" or the specialization point
  int max_degree = 0;
  std::vector<size_t> dims;  // graded: per degree; filtered: cumulative
  bool collapsed = false;    // a nonzero constant lies in the ideal
  std::string collapse_witness;  // the combination of relations equal to 1
};

// Quotient dimensions through degree D, exact over the (possibly
// specialized) coefficient field.
HilbertResult hilbert(const RelationFamily& f, int D,
                      const ParamPoint& at = {});

// Free-algebra and symmetric-algebra references (graded: per degree;
// filtered: cumulative).
std::vector<size_t> free_dims(uint32_t ngens, int D, FamilyKind kind);
std::vector<size_t> sym_dims(uint32_t ngens, int D, FamilyKind kind);

// Independent commutative oracle: dimensions of Sym(gens)/(relations)
// through degree D by elimination over commutative monomials.
std::vector<size_t> commutative_quotient_dims(const std::vector<CPoly>& rels,
                                              const GenSetPtr& gens,
                                              const ParamSetPtr& ps, int D,
                                              FamilyKind kind);

// Classical reference of a family: specialize q = 1, h = 0, take
// commutative images of the relations, and run the commutative oracle.
std::vector<size_t> classical_reference_dims(const RelationFamily& f, int D);

struct FlatnessVerdict {
  bool pass = false;
  int first_deviation = -1;  // degree of the first mismatch, -1 if none
  std::string witness;       // mismatching dims plus an ideal element
  HilbertResult computed;
  std::vector<size_t> reference;
};
FlatnessVerdict flatness_verdict(const RelationFamily& f, int D,
                                 const std::vector<size_t>& reference,
                                 const ParamPoint& at = {});

// ---------------------------------------------------------------------------
// Tensor-level compatibility conditions for quadratic-linear-constant data.
//
// The quotient T(V) / { b - nu1(b) - nu0(b) : b in I } is a flat (PBW-type)
// deformation through degree 3 iff, on K = (I (x) V) cap (V (x) I):
//   1. (nu1 (x) id - id (x) nu1)(K)  lies in  I;
//   2. (nu1 (nu1 (x) id - id (x) nu1) + nu0 (x) id - id (x) nu0)(K) = 0;
//   3. nu0 (nu1 (x) id - id (x) nu1)(K) = 0.

struct NuData {
  ParamSetPtr ps;
  uint32_t dim = 0;  // dim V
  Subspace ideal;    // I inside V (x) V
  LinOp nu1;         // V (x) V -> V
  LinOp nu0;         // V (x) V -> scalars, a 1-row operator
};

struct NuCheckReport {
  size_t k_dim = 0;  // dim of K
  // Canonical polynomial constraints on the free parameters under which
  // each condition holds (empty = holds identically).  Condition 1 is
  // evaluated against the annihilator of I, so its constraints are exact
  // away from the finitely many parameter values where I degenerates.
  std::vector<IPoly> inclusion_constraints;
  std::vector<IPoly> assoc_constraints;
  std::vector<IPoly> scalar_constraints;

  bool holds_identically() const {
    return inclusion_constraints.empty() && assoc_constraints.empty() &&
           scalar_constraints.empty();
  }
};
NuCheckReport pbw_nu_check(const NuData& d);

}  // namespace qpencil
