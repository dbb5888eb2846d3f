#include "qpencil/cpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qpencil/ncpoly.hpp"

namespace qpencil {

CPoly CPoly::from_scalar(GenSetPtr gens, Scalar c) {
  CPoly p(std::move(gens), c.params());
  if (!c.is_zero()) p.t_.push_back({Mono(p.gens_->size(), 0), std::move(c)});
  return p;
}

CPoly CPoly::gen(GenSetPtr gens, ParamSetPtr ps, size_t idx, int exp) {
  require(idx < gens->size(), "generator index out of range");
  require(exp >= 1, "generator exponent must be positive");
  Mono m(gens->size(), 0);
  m[idx] = exp;
  return monomial(std::move(gens), std::move(m), Scalar::one(std::move(ps)));
}

CPoly CPoly::monomial(GenSetPtr gens, Mono m, Scalar c) {
  require(m.size() == gens->size(), "monomial width mismatch");
  CPoly p(std::move(gens), c.params());
  if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
  return p;
}

bool CPoly::is_scalar() const {
  return t_.empty() || (t_.size() == 1 && mono_total_degree(t_[0].m) == 0);
}

Scalar CPoly::scalar_value() const {
  require(is_scalar(), "polynomial is not scalar");
  return t_.empty() ? Scalar::zero(ps_) : t_[0].c;
}

int CPoly::total_degree() const {
  return t_.empty() ? -1 : mono_total_degree(t_[0].m);
}

void CPoly::normalize() {
  std::sort(t_.begin(), t_.end(),
            [](const Term& a, const Term& b) { return mono_grlex_less(b.m, a.m); });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (Term& t : t_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  t_ = std::move(out);
}

CPoly CPoly::operator+(const CPoly& o) const {
  check_same_gens(gens_, o.gens_);
  CPoly r(gens_, ps_);
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].m == o.t_[j].m) {
      Scalar c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) r.t_.push_back({t_[i].m, std::move(c)});
      ++i, ++j;
    } else if (mono_grlex_less(o.t_[j].m, t_[i].m)) {
      r.t_.push_back(t_[i++]);
    } else {
      r.t_.push_back(o.t_[j++]);
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

CPoly CPoly::operator-() const {
  CPoly r(*this);
  for (Term& t : r.t_) t.c = -t.c;
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + (-o); }

CPoly CPoly::operator*(const CPoly& o) const {
  check_same_gens(gens_, o.gens_);
  CPoly r(gens_, ps_);
  Mono m(gens_->size());
  for (const Term& a : t_)
    for (const Term& b : o.t_) {
      for (size_t k = 0; k < m.size(); ++k) m[k] = a.m[k] + b.m[k];
      r.t_.push_back({m, a.c * b.c});
    }
  r.normalize();
  return r;
}

CPoly CPoly::scaled(const Scalar& k) const {
  if (k.is_zero()) return CPoly(gens_, ps_);
  CPoly r(*this);
  for (Term& t : r.t_) t.c *= k;
  return r;
}

CPoly CPoly::pow(unsigned e) const {
  CPoly r = CPoly::from_scalar(gens_, Scalar::one(ps_));
  CPoly b(*this);
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool CPoly::operator==(const CPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

CPoly CPoly::derivative(size_t gen_idx) const {
  CPoly r(gens_, ps_);
  for (const Term& t : t_) {
    if (t.m[gen_idx] == 0) continue;
    Term nt = t;
    nt.c *= Scalar::integer(ps_, nt.m[gen_idx]);
    nt.m[gen_idx] -= 1;
    r.t_.push_back(std::move(nt));
  }
  r.normalize();
  return r;
}

CPoly CPoly::substitute_gen(size_t idx, const CPoly& val) const {
  check_same_gens(gens_, val.gens_);
  CPoly r(gens_, ps_);
  for (const Term& t : t_) {
    Term nt = t;
    int e = nt.m[idx];
    nt.m[idx] = 0;
    CPoly part = CPoly::monomial(gens_, nt.m, nt.c);
    if (e > 0) part *= val.pow(static_cast<unsigned>(e));
    r += part;
  }
  return r;
}

CPoly CPoly::map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const {
  CPoly r(gens_, ps_);
  bool first = true;
  for (const Term& t : t_) {
    Scalar c = fn(t.c);
    if (first && !c.is_zero()) r.ps_ = c.params(), first = false;
    if (!c.is_zero()) r.t_.push_back({t.m, std::move(c)});
  }
  if (!r.t_.empty()) r.ps_ = r.t_[0].c.params();
  r.normalize();
  return r;
}

CPoly CPoly::homogeneous_part(int d) const {
  CPoly r(gens_, ps_);
  for (const Term& t : t_)
    if (mono_total_degree(t.m) == d) r.t_.push_back(t);
  return r;
}

std::string CPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : t_) {
    Scalar c = t.c;
    bool neg = false;
    // pull a plain leading minus out of integer coefficients
    if (c.num().is_constant() && c.den().is_constant() && c.num().constant_value() < 0) {
      neg = true;
      c = -c;
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool has_vars = mono_total_degree(t.m) > 0;
    bool coeff_shown = true;
    if (c.is_one() && has_vars)
      coeff_shown = false;
    else if (c.is_integer())
      os << c.num().constant_value().str();
    else
      os << c.to_string();
    bool need_star = coeff_shown;
    for (size_t i = 0; i < t.m.size(); ++i) {
      if (t.m[i] == 0) continue;
      if (need_star) os << "*";
      if (t.m[i] > 1)
        os << "(" << gens_->name(i) << ")^" << t.m[i];
      else
        os << gens_->name(i);
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace qpencil
