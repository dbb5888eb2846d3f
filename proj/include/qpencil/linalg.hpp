// Exact linear algebra over the Scalar field.
//
// Vectors are sparse (sorted index/coefficient pairs).  Elimination is
// fraction-free: row combinations are cross-multiplied, and rows are then
// rescaled by their joint integer and monomial content (plus a univariate
// gcd when a row lives in one parameter), so entries stay polynomial until
// the final normalization of a canonical reduced row echelon form.  The RREF
// of a span is unique, so Subspace comparisons are canonical and independent
// of insertion order.  Column numbering is chosen by the caller: lower column
// indices are preferred as pivots.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qpencil/scalar.hpp"

namespace qpencil {

using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

SparseVec sv_normalized(SparseVec v);  // sort, merge, drop zeros
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scaled(const SparseVec& a, const Scalar& k);
// ca*a + cb*b
SparseVec sv_combine(const SparseVec& a, const Scalar& ca, const SparseVec& b,
                     const Scalar& cb);
const Scalar* sv_get(const SparseVec& v, uint32_t col);
bool sv_equal(const SparseVec& a, const SparseVec& b);
// Rescale so every entry is polynomial with joint content removed and the
// leading entry has a positive leading coefficient.
SparseVec sv_content_normalized(SparseVec v, const ParamSetPtr& ps);

class Subspace {
 public:
  Subspace() = default;
  Subspace(uint32_t ncols, ParamSetPtr ps) : ncols_(ncols), ps_(std::move(ps)) {}

  uint32_t ncols() const { return ncols_; }
  const ParamSetPtr& params() const { return ps_; }
  size_t dimension() const { return rows_.size(); }

  // Insert a vector; returns true if it enlarged the span.
  bool insert(SparseVec v);
  // Residue of v after reduction against the current echelon basis
  // (content-normalized; empty iff v lies in the span).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& o) const;
  bool equals(const Subspace& o) const;

  // Reduced row echelon form rows, pivot-ascending, pivots scaled to 1.
  const std::vector<SparseVec>& canonical_rows() const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Count of echelon rows whose support lies entirely in columns >= from.
  size_t rows_supported_from(uint32_t from) const;

 private:
  uint32_t ncols_ = 0;
  ParamSetPtr ps_;
  std::map<uint32_t, SparseVec> rows_;  // pivot column -> row
  mutable std::vector<SparseVec> canon_;
  mutable bool canon_valid_ = false;
};

// Solution space of the homogeneous system given by equation rows.
Subspace kernel_of_rows(const std::vector<SparseVec>& rows, uint32_t ncols,
                        const ParamSetPtr& ps);

// Entrywise parameter specialization.
SparseVec sv_substituted(const SparseVec& v, const std::string& name,
                         const Rat& val);

// Canonical generating set for the rational span of integer polynomials in
// the parameters: echelonized over the occurring parameter monomials
// (graded-lex descending), integer content cleared, leading coefficients
// positive.  Zero inputs are dropped.
std::vector<IPoly> echelon_ipolys(const std::vector<IPoly>& raw,
                                  const ParamSetPtr& ps);

// Sparse linear operator, stored column-wise: cols[j] = image of basis j.
class LinOp {
 public:
  LinOp() = default;
  LinOp(uint32_t dim_in, uint32_t dim_out, ParamSetPtr ps)
      : in_(dim_in), out_(dim_out), ps_(std::move(ps)), cols_(dim_in) {}

  static LinOp identity(uint32_t dim, ParamSetPtr ps);

  uint32_t dim_in() const { return in_; }
  uint32_t dim_out() const { return out_; }
  const ParamSetPtr& params() const { return ps_; }

  void set(uint32_t row, uint32_t col, Scalar v);
  void add(uint32_t row, uint32_t col, const Scalar& v);
  Scalar get(uint32_t row, uint32_t col) const;
  const SparseVec& col(uint32_t j) const { return cols_.at(j); }
  void set_col(uint32_t j, SparseVec v) { cols_.at(j) = sv_normalized(std::move(v)); }

  SparseVec apply(const SparseVec& v) const;
  LinOp compose(const LinOp& inner) const;  // (*this) after inner
  LinOp operator+(const LinOp& o) const;
  LinOp operator-(const LinOp& o) const;
  LinOp scaled(const Scalar& k) const;
  bool operator==(const LinOp& o) const;
  bool operator!=(const LinOp& o) const { return !(*this == o); }
  bool is_zero() const;

  LinOp transpose() const;
  Subspace image() const;
  Subspace kernel() const;
  // Exact inverse (throws if singular); dense elimination, intended for the
  // small square operators of this library.
  LinOp inverse() const;

  // Lift an operator on U (dim m*m = dim_in, viewing U = V (x) V) to act on
  // positions (1,2) or (2,3) of V (x) V (x) V where dim V = m.
  LinOp lift12(uint32_t m) const;
  LinOp lift23(uint32_t m) const;
  // Kronecker product: (A (x) B)(e_i (x) e_j) with row-major index pairing.
  LinOp tensor(const LinOp& o) const;

  Scalar trace() const;

 private:
  uint32_t in_ = 0, out_ = 0;
  ParamSetPtr ps_;
  std::vector<SparseVec> cols_;
};

// Entrywise parameter specialization of every matrix entry.
LinOp op_substituted(const LinOp& op, const std::string& name, const Rat& val);

}  // namespace qpencil
