// Element of the free (noncommutative) associative algebra on declared
// generators with Scalar coefficients.  Words are sequences of generator
// indices; terms are sorted by (degree desc, word lex asc), a canonical form.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qpencil/gens.hpp"
#include "qpencil/scalar.hpp"

namespace qpencil {

using Word = std::vector<uint32_t>;

bool word_less(const Word& a, const Word& b);  // term order (degree, then lex)

class NCPoly {
 public:
  struct Term {
    Word w;
    Scalar c;
  };

  NCPoly() = default;
  NCPoly(GenSetPtr gens, ParamSetPtr ps) : gens_(std::move(gens)), ps_(std::move(ps)) {}

  static NCPoly zero(GenSetPtr gens, ParamSetPtr ps) { return NCPoly(std::move(gens), std::move(ps)); }
  static NCPoly from_scalar(GenSetPtr gens, Scalar c);
  static NCPoly gen(GenSetPtr gens, ParamSetPtr ps, size_t idx);
  static NCPoly word(GenSetPtr gens, ParamSetPtr ps, Word w, Scalar c);

  const GenSetPtr& gens() const { return gens_; }
  const ParamSetPtr& params() const { return ps_; }
  const std::vector<Term>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  int max_degree() const;  // -1 for zero
  int min_degree() const;
  bool homogeneous() const { return is_zero() || max_degree() == min_degree(); }

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;  // word concatenation
  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
  NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  NCPoly scaled(const Scalar& k) const;
  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  NCPoly degree_part(int d) const;
  NCPoly map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const;
  // Image in the commutative algebra on the same generators.
  class CPoly to_commutative() const;

  std::string to_string() const;

  void normalize();

 private:
  GenSetPtr gens_;
  ParamSetPtr ps_;
  std::vector<Term> t_;
};

// Enumerate all words of the given degree in lex-ascending order.
std::vector<Word> all_words(size_t ngens, int degree);
// Position of w within all_words(ngens, w.size()).
size_t word_rank(size_t ngens, const Word& w);

}  // namespace qpencil
