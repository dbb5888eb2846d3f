// Commutative polynomial in declared generators with Scalar coefficients.
// Canonical form: terms sorted in descending graded-lex order on generator
// exponent vectors.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpencil/gens.hpp"
#include "qpencil/scalar.hpp"

namespace qpencil {

class CPoly {
 public:
  struct Term {
    Mono m;  // exponents over generators
    Scalar c;
  };

  CPoly() = default;
  CPoly(GenSetPtr gens, ParamSetPtr ps) : gens_(std::move(gens)), ps_(std::move(ps)) {}

  static CPoly zero(GenSetPtr gens, ParamSetPtr ps) { return CPoly(std::move(gens), std::move(ps)); }
  static CPoly from_scalar(GenSetPtr gens, Scalar c);
  static CPoly gen(GenSetPtr gens, ParamSetPtr ps, size_t idx, int exp = 1);
  static CPoly monomial(GenSetPtr gens, Mono m, Scalar c);

  const GenSetPtr& gens() const { return gens_; }
  const ParamSetPtr& params() const { return ps_; }
  const std::vector<Term>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const;       // no generator occurs
  Scalar scalar_value() const;  // requires is_scalar()
  int total_degree() const;     // -1 for zero

  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o) { return *this = *this + o; }
  CPoly& operator-=(const CPoly& o) { return *this = *this - o; }
  CPoly& operator*=(const CPoly& o) { return *this = *this * o; }
  CPoly scaled(const Scalar& k) const;
  CPoly pow(unsigned e) const;
  bool operator==(const CPoly& o) const;  // exact: uses Scalar cross-mult eq
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  CPoly derivative(size_t gen_idx) const;
  // Substitute generator idx := value (polynomial over the same sets).
  CPoly substitute_gen(size_t idx, const CPoly& val) const;
  // Apply fn to every coefficient (e.g. parameter specialization).
  CPoly map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const;
  CPoly homogeneous_part(int d) const;

  std::string to_string() const;

  void normalize();

 private:
  GenSetPtr gens_;
  ParamSetPtr ps_;
  std::vector<Term> t_;
};

}  // namespace qpencil
