// Exact fraction field over integer multivariate polynomials: the coefficient
// domain for every computation in the library.  Negative parameter powers are
// represented through denominators (q^-1 is 1/q).
//
// Normal form: denominator nonzero with positive leading coefficient, joint
// integer content and joint monomial content removed, denominator free of the
// formal imaginary unit (cleared by conjugate multiplication), and num/den
// reduced by their gcd when both are univariate in the same parameter.
// Equality never relies on gcd strength: it cross-multiplies.
#pragma once

#include <map>
#include <string>

#include "qpencil/ipoly.hpp"

namespace qpencil {

class Scalar {
 public:
  Scalar() = default;  // invalid until assigned
  explicit Scalar(ParamSetPtr ps)
      : num_(IPoly::zero(ps)), den_(IPoly::constant(ps, 1)) {}
  Scalar(IPoly num, IPoly den);

  static Scalar zero(ParamSetPtr ps) { return Scalar(std::move(ps)); }
  static Scalar one(ParamSetPtr ps) { return integer(std::move(ps), 1); }
  static Scalar integer(ParamSetPtr ps, Int k);
  static Scalar rational(ParamSetPtr ps, Int num, Int den);
  static Scalar rational(ParamSetPtr ps, const Rat& r);
  static Scalar param(ParamSetPtr ps, const std::string& name, int exp = 1);
  static Scalar from_poly(IPoly p);

  const ParamSetPtr& params() const { return num_.params(); }
  const IPoly& num() const { return num_; }
  const IPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_integer() const { return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  Scalar pow(int e) const;  // negative exponents allowed

  // Equality by cross-multiplication: a.num*b.den == b.num*a.den.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Negate the formal imaginary unit everywhere (identity if none declared).
  Scalar conj_imag() const;

  // Evaluate at a rational point covering every parameter that occurs.
  // Throws (naming the parameter / the vanishing denominator) on failure.
  Rat eval(const std::map<std::string, Rat>& point) const;
  // Substitute one parameter by a rational value, keeping the others formal.
  Scalar substitute(const std::string& name, const Rat& val) const;
  // Substitute one parameter by another scalar over the same set.
  Scalar substitute(const std::string& name, const Scalar& val) const;

  // Canonical form "(num)" or "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();
  IPoly num_, den_;
};

inline Scalar operator*(const Int& k, const Scalar& s) {
  return Scalar::integer(s.params(), k) * s;
}

}  // namespace qpencil
