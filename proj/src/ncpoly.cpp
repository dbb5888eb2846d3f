#include "qpencil/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qpencil/cpoly.hpp"

namespace qpencil {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // lex on equal length
}

NCPoly NCPoly::from_scalar(GenSetPtr gens, Scalar c) {
  NCPoly p(std::move(gens), c.params());
  if (!c.is_zero()) p.t_.push_back({Word{}, std::move(c)});
  return p;
}

NCPoly NCPoly::gen(GenSetPtr gens, ParamSetPtr ps, size_t idx) {
  require(idx < gens->size(), "generator index out of range");
  return word(std::move(gens), ps, Word{static_cast<uint32_t>(idx)}, Scalar::one(ps));
}

NCPoly NCPoly::word(GenSetPtr gens, ParamSetPtr ps, Word w, Scalar c) {
  for (uint32_t g : w) require(g < gens->size(), "generator index out of range");
  NCPoly p(std::move(gens), std::move(ps));
  if (!c.is_zero()) p.t_.push_back({std::move(w), std::move(c)});
  return p;
}

int NCPoly::max_degree() const {
  return t_.empty() ? -1 : static_cast<int>(t_.front().w.size());
}

int NCPoly::min_degree() const {
  return t_.empty() ? -1 : static_cast<int>(t_.back().w.size());
}

void NCPoly::normalize() {
  // degree descending, lex ascending within a degree
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
    if (a.w.size() != b.w.size()) return a.w.size() > b.w.size();
    return a.w < b.w;
  });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (Term& t : t_) {
    if (!out.empty() && out.back().w == t.w)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  t_ = std::move(out);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  check_same_gens(gens_, o.gens_);
  NCPoly r(gens_, ps_);
  r.t_ = t_;
  for (const Term& t : o.t_) r.t_.push_back(t);
  r.normalize();
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(*this);
  for (Term& t : r.t_) t.c = -t.c;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
  check_same_gens(gens_, o.gens_);
  NCPoly r(gens_, ps_);
  for (const Term& a : t_)
    for (const Term& b : o.t_) {
      Word w = a.w;
      w.insert(w.end(), b.w.begin(), b.w.end());
      r.t_.push_back({std::move(w), a.c * b.c});
    }
  r.normalize();
  return r;
}

NCPoly NCPoly::scaled(const Scalar& k) const {
  if (k.is_zero()) return NCPoly(gens_, ps_);
  NCPoly r(*this);
  for (Term& t : r.t_) t.c *= k;
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].w != o.t_[i].w || t_[i].c != o.t_[i].c) return false;
  return true;
}

NCPoly NCPoly::degree_part(int d) const {
  NCPoly r(gens_, ps_);
  for (const Term& t : t_)
    if (static_cast<int>(t.w.size()) == d) r.t_.push_back(t);
  return r;
}

NCPoly NCPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const {
  NCPoly r(gens_, ps_);
  for (const Term& t : t_) {
    Scalar c = fn(t.c);
    if (!c.is_zero()) r.t_.push_back({t.w, std::move(c)});
  }
  if (!r.t_.empty()) r.ps_ = r.t_[0].c.params();
  r.normalize();
  return r;
}

CPoly NCPoly::to_commutative() const {
  CPoly r = CPoly::zero(gens_, ps_);
  for (const Term& t : t_) {
    Mono m(gens_->size(), 0);
    for (uint32_t g : t.w) m[g] += 1;
    r += CPoly::monomial(gens_, std::move(m), t.c);
  }
  return r;
}

std::string NCPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : t_) {
    Scalar c = t.c;
    bool neg = false;
    if (c.num().is_constant() && c.den().is_constant() && c.num().constant_value() < 0) {
      neg = true;
      c = -c;
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool has_vars = !t.w.empty();
    bool coeff_shown = true;
    if (c.is_one() && has_vars)
      coeff_shown = false;
    else if (c.is_integer())
      os << c.num().constant_value().str();
    else
      os << c.to_string();
    bool need_star = coeff_shown;
    for (uint32_t g : t.w) {
      if (need_star) os << "*";
      os << gens_->name(g);
      need_star = true;
    }
  }
  return os.str();
}

std::vector<Word> all_words(size_t ngens, int degree) {
  std::vector<Word> out;
  if (degree == 0) {
    out.push_back({});
    return out;
  }
  size_t count = 1;
  for (int i = 0; i < degree; ++i) count *= ngens;
  out.reserve(count);
  Word w(degree, 0);
  for (size_t r = 0; r < count; ++r) {
    size_t x = r;
    for (int p = degree - 1; p >= 0; --p) {
      w[p] = static_cast<uint32_t>(x % ngens);
      x /= ngens;
    }
    out.push_back(w);
  }
  return out;
}

size_t word_rank(size_t ngens, const Word& w) {
  size_t r = 0;
  for (uint32_t g : w) r = r * ngens + g;
  return r;
}

}  // namespace qpencil
