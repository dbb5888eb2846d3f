// Multivariate polynomial with arbitrary-precision integer coefficients over
// a ParamSet.  Terms are kept sorted in descending graded-lex order, which
// makes the representation canonical: equal polynomials compare equal
// term-by-term.  If the ParamSet declares a formal imaginary unit, powers of
// it are reduced via i^2 = -1 on normalization.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpencil/params.hpp"

namespace qpencil {

using Mono = std::vector<int32_t>;  // exponent vector, one slot per parameter

int mono_total_degree(const Mono& m);
// Graded lex: higher total degree first, ties broken lexicographically.
bool mono_grlex_less(const Mono& a, const Mono& b);

class IPoly {
 public:
  struct Term {
    Mono m;
    Int c;
  };

  IPoly() = default;  // invalid until given a param set
  explicit IPoly(ParamSetPtr ps) : ps_(std::move(ps)) {}

  static IPoly zero(ParamSetPtr ps) { return IPoly(std::move(ps)); }
  static IPoly constant(ParamSetPtr ps, Int c);
  static IPoly param(ParamSetPtr ps, size_t idx, int exp = 1);
  static IPoly monomial(ParamSetPtr ps, Mono m, Int c);

  const ParamSetPtr& params() const { return ps_; }
  const std::vector<Term>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Int constant_value() const;  // requires is_constant()
  int total_degree() const;    // -1 for zero
  int degree_in(size_t idx) const;
  bool occurs(size_t idx) const { return degree_in(idx) > 0; }
  // True if at most one variable occurs; sets idx to it (or leaves -1 if
  // the polynomial is constant).
  bool univariate(int& idx) const;

  IPoly operator+(const IPoly& o) const;
  IPoly operator-(const IPoly& o) const;
  IPoly operator*(const IPoly& o) const;
  IPoly operator-() const;
  IPoly& operator+=(const IPoly& o) { return *this = *this + o; }
  IPoly& operator-=(const IPoly& o) { return *this = *this - o; }
  IPoly& operator*=(const IPoly& o) { return *this = *this * o; }
  IPoly mul_int(const Int& k) const;
  IPoly pow(unsigned e) const;
  bool operator==(const IPoly& o) const;
  bool operator!=(const IPoly& o) const { return !(*this == o); }

  // gcd of all integer coefficients (non-negative; 0 for the zero poly)
  Int int_content() const;
  // componentwise min of all exponent vectors (zero vector for zero poly)
  Mono mono_content() const;
  void divide_int(const Int& g);    // exact; g must divide every coefficient
  void divide_mono(const Mono& m);  // exact; m must divide every monomial

  const Term& lead() const;  // grlex-largest term; requires nonzero

  // Negate every term with odd exponent of the formal imaginary unit.
  IPoly conj_imag() const;
  bool has_imag() const;

  // Full evaluation; point has one entry per parameter.
  Rat eval(const std::vector<Rat>& point) const;
  // Substitute parameter idx := num/den.  Returns (P', k) such that the
  // substituted value equals P' / den^k; P' has idx eliminated.
  std::pair<IPoly, int> substitute(size_t idx, const Rat& val) const;
  // Substitute parameter idx := value (a polynomial over the same set).
  IPoly substitute_poly(size_t idx, const IPoly& val) const;

  // Exact division by a univariate polynomial in variable idx; throws if the
  // division is not exact.
  IPoly divide_exact_univ(const IPoly& d, size_t idx) const;
  // gcd of two univariate polynomials in the same variable (primitive,
  // positive leading coefficient).  Either argument may be constant.
  static IPoly gcd_univ(const IPoly& a, const IPoly& b, size_t idx);

  std::string to_string() const;

  // Sort terms, merge duplicates, reduce imaginary powers, drop zeros.
  void normalize();

  std::vector<Term>& mutable_terms() { return t_; }

 private:
  ParamSetPtr ps_;
  std::vector<Term> t_;  // sorted grlex-descending
};

}  // namespace qpencil
