// Poisson structures presented by generator-level bracket tables with
// polynomial values, extended to the whole commutative algebra as a
// biderivation (Leibniz rule in each slot).  Includes the quadratic and
// linear matrix-coordinate brackets, the gl(n) bracket, the four-generator
// elliptic bracket with formal J-coefficients, a Kirillov-type linear
// bracket and the quadratic r-matrix bracket for the three-dimensional
// simple algebra, plus the shift/linearization machinery.
#pragma once

#include <string>
#include <vector>

#include "qpencil/cpoly.hpp"

namespace qpencil {

class BracketTable {
 public:
  BracketTable() = default;
  // Entries default to zero; diagonal must stay zero.
  BracketTable(GenSetPtr gens, ParamSetPtr ps);

  const GenSetPtr& gens() const { return gens_; }
  const ParamSetPtr& params() const { return ps_; }

  // Sets {g_i, g_j} = p and {g_j, g_i} = -p.
  void set(size_t i, size_t j, CPoly p);
  const CPoly& entry(size_t i, size_t j) const;

  // Biderivation extension: {f, g} = sum_{i,j} df/dx_i dg/dx_j {x_i, x_j}.
  CPoly eval(const CPoly& f, const CPoly& g) const;

  // Apply fn to every table coefficient (parameter substitution etc.).
  BracketTable map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const;

  // Largest total degree over table entries (-1 if all zero).
  int max_entry_degree() const;

 private:
  GenSetPtr gens_;
  ParamSetPtr ps_;
  std::vector<std::vector<CPoly>> t_;
};

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
CPoly jacobiator(const BracketTable& t, const CPoly& f, const CPoly& g,
                 const CPoly& h);
// Cyclic sum of {f,{g,h}_1}_2 + {f,{g,h}_2}_1: vanishes iff the pencil
// a*T1 + b*T2 is Poisson for all (a,b) given both Jacobi identities hold.
CPoly mixed_jacobiator(const BracketTable& t1, const BracketTable& t2,
                       const CPoly& f, const CPoly& g, const CPoly& h);

// Jacobiators over all generator triples i<j<k; returns the (i,j,k, value)
// list of the nonzero ones (empty means the Jacobi identity holds).
struct TripleFailure {
  size_t i, j, k;
  CPoly value;
};
std::vector<TripleFailure> jacobi_failures(const BracketTable& t);
std::vector<TripleFailure> mixed_jacobi_failures(const BracketTable& t1,
                                                 const BracketTable& t2);

// Shift g_k -> g_k + h*shift[k] applied to the right-hand sides of a
// (quadratic) table; `linear` is the coefficient of h^1, `shifted` the full
// shifted table.  Throws if any entry has degree > 1 in h.
struct ShiftResult {
  BracketTable shifted;
  BracketTable linear;
};
ShiftResult shift_and_linearize(const BracketTable& t,
                                const std::vector<Scalar>& shift,
                                const std::string& h_name);

// Coefficient of name^k in a scalar whose denominator is free of name.
Scalar scalar_coeff_of(const Scalar& s, const std::string& name, int k);

// --- catalog ---------------------------------------------------------------

// Quadratic matrix-coordinate bracket on a_i^j (same-row/same-column pairs
// multiply, co-oriented pairs give 2 a_i^l a_k^j, contra-oriented commute).
BracketTable sklyanin2(int n, const ParamSetPtr& ps);
// Its linearization: the printed delta-form table.
BracketTable linear1(int n, const ParamSetPtr& ps);
// Linear bracket of gl(n): {a_i^j, a_k^l} = a_i^l d_k^j - a_k^j d_i^l.
BracketTable gl_bracket(int n, const ParamSetPtr& ps);
// Four-generator quadratic bracket with formal J coefficients:
// {S1,S0} = 2 J23 S2 S3, {S1,S2} = -2 S0 S3, and cyclic images in (1,2,3).
// ps must contain J12, J23, J31.
BracketTable elliptic_bracket(const ParamSetPtr& ps);
// Linear bracket of the three-dimensional simple algebra on {H, X, Y}.
BracketTable kks_sl2(const ParamSetPtr& ps);
// Quadratic r-matrix bracket on {H, X, Y}:
// {y,z} = sum r^{ab} [x_a,y][x_b,z] with r = (X (x) Y - Y (x) X)/2.
BracketTable rmat_sl2(const ParamSetPtr& ps);

// Catalog lookup by name: sklyanin2(n), linear1(n), gl(n), elliptic,
// kks(sl2), rmat(sl2).
BracketTable bracket_catalog(const std::string& name, const ParamSetPtr& ps);

// Load a bracket table from a declarative text file:
//   gens: x y z
//   {x,y} = <polynomial>
// Unlisted pairs are zero; listed pairs fill both orientations.
BracketTable load_bracket_table(const std::string& path, const ParamSetPtr& ps);

// The operator sign(col - row) on a_i^j matrix coordinates, as diagonal
// signs indexed by generator.
std::vector<int> row_column_signs(int n);

// True iff the printed linear table equals the sign-twisted gl table:
// {x,y}_1 = {R x, y}_gl + {x, R y}_gl with R(a_i^j) = sign(j-i) a_i^j.
bool r_twisted_check(int n, const ParamSetPtr& ps);

// Polynomial conditions on the formal J parameters equivalent to the
// elliptic table satisfying the Jacobi identity on all generator triples,
// in canonical reduced (echelon) form.
std::vector<IPoly> elliptic_constraints(const ParamSetPtr& ps);

}  // namespace qpencil
