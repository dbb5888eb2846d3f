#include "qpencil/ipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qpencil {

int mono_total_degree(const Mono& m) {
  int d = 0;
  for (int32_t e : m) d += e;
  return d;
}

bool mono_grlex_less(const Mono& a, const Mono& b) {
  int da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  // same degree: lexicographic with earlier parameters weighing more
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

IPoly IPoly::constant(ParamSetPtr ps, Int c) {
  IPoly p(ps);
  if (c != 0) p.t_.push_back({Mono(ps->size(), 0), std::move(c)});
  return p;
}

IPoly IPoly::param(ParamSetPtr ps, size_t idx, int exp) {
  require(idx < ps->size(), "parameter index out of range");
  require(exp >= 1, "parameter exponent must be positive");
  Mono m(ps->size(), 0);
  m[idx] = exp;
  return monomial(std::move(ps), std::move(m), 1);
}

IPoly IPoly::monomial(ParamSetPtr ps, Mono m, Int c) {
  require(m.size() == ps->size(), "monomial width mismatch");
  IPoly p(std::move(ps));
  if (c != 0) {
    p.t_.push_back({std::move(m), std::move(c)});
    p.normalize();
  }
  return p;
}

bool IPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && mono_total_degree(t_[0].m) == 0);
}

Int IPoly::constant_value() const {
  require(is_constant(), "not a constant polynomial");
  return t_.empty() ? Int(0) : t_[0].c;
}

int IPoly::total_degree() const {
  return t_.empty() ? -1 : mono_total_degree(t_[0].m);
}

int IPoly::degree_in(size_t idx) const {
  int d = 0;
  for (const Term& t : t_) d = std::max(d, static_cast<int>(t.m[idx]));
  return d;
}

bool IPoly::univariate(int& idx) const {
  idx = -1;
  for (const Term& t : t_)
    for (size_t i = 0; i < t.m.size(); ++i)
      if (t.m[i] != 0) {
        if (idx == -1)
          idx = static_cast<int>(i);
        else if (idx != static_cast<int>(i))
          return false;
      }
  return true;
}

void IPoly::normalize() {
  const int imag = ps_ ? ps_->imag_index() : -1;
  if (imag >= 0) {
    for (Term& t : t_) {
      int32_t e = t.m[imag];
      if (e >= 2) {
        if ((e / 2) % 2 == 1) t.c = -t.c;
        t.m[imag] = e % 2;
      }
    }
  }
  std::sort(t_.begin(), t_.end(),
            [](const Term& a, const Term& b) { return mono_grlex_less(b.m, a.m); });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (Term& t : t_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  t_ = std::move(out);
}

IPoly IPoly::operator+(const IPoly& o) const {
  check_same(ps_, o.ps_);
  IPoly r(ps_);
  r.t_.reserve(t_.size() + o.t_.size());
  // merge two grlex-descending lists
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].m == o.t_[j].m) {
      Int c = t_[i].c + o.t_[j].c;
      if (c != 0) r.t_.push_back({t_[i].m, std::move(c)});
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

IPoly IPoly::operator-() const {
  IPoly r(*this);
  for (Term& t : r.t_) t.c = -t.c;
  return r;
}

IPoly IPoly::operator-(const IPoly& o) const { return *this + (-o); }

IPoly IPoly::operator*(const IPoly& o) const {
  check_same(ps_, o.ps_);
  IPoly r(ps_);
  if (t_.empty() || o.t_.empty()) return r;
  std::map<Mono, Int, bool (*)(const Mono&, const Mono&)> acc(mono_grlex_less);
  Mono m(ps_->size());
  for (const Term& a : t_)
    for (const Term& b : o.t_) {
      for (size_t k = 0; k < m.size(); ++k) m[k] = a.m[k] + b.m[k];
      acc[m] += a.c * b.c;
    }
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.t_.push_back({it->first, it->second});
  r.normalize();  // imaginary reduction may re-merge terms
  return r;
}

IPoly IPoly::mul_int(const Int& k) const {
  if (k == 0) return IPoly(ps_);
  IPoly r(*this);
  for (Term& t : r.t_) t.c *= k;
  return r;
}

IPoly IPoly::pow(unsigned e) const {
  IPoly r = IPoly::constant(ps_, 1);
  IPoly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

bool IPoly::operator==(const IPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

Int IPoly::int_content() const {
  Int g = 0;
  for (const Term& t : t_) {
    g = boost::multiprecision::gcd(g, t.c);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

Mono IPoly::mono_content() const {
  if (t_.empty()) return Mono(ps_ ? ps_->size() : 0, 0);
  Mono m = t_[0].m;
  for (const Term& t : t_)
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.m[i]);
  return m;
}

void IPoly::divide_int(const Int& g) {
  require(g != 0, "division by zero content");
  for (Term& t : t_) {
    require(t.c % g == 0, "inexact integer content division");
    t.c /= g;
  }
}

void IPoly::divide_mono(const Mono& m) {
  for (Term& t : t_)
    for (size_t i = 0; i < m.size(); ++i) {
      t.m[i] -= m[i];
      require(t.m[i] >= 0, "inexact monomial division");
    }
}

const IPoly::Term& IPoly::lead() const {
  require(!t_.empty(), "zero polynomial has no leading term");
  return t_[0];
}

IPoly IPoly::conj_imag() const {
  const int imag = ps_ ? ps_->imag_index() : -1;
  if (imag < 0) return *this;
  IPoly r(*this);
  for (Term& t : r.t_)
    if (t.m[imag] % 2 == 1) t.c = -t.c;
  return r;
}

bool IPoly::has_imag() const {
  const int imag = ps_ ? ps_->imag_index() : -1;
  if (imag < 0) return false;
  for (const Term& t : t_)
    if (t.m[imag] != 0) return true;
  return false;
}

Rat IPoly::eval(const std::vector<Rat>& point) const {
  require(point.size() == ps_->size(), "evaluation point width mismatch");
  Rat acc = 0;
  for (const Term& t : t_) {
    Rat v(t.c);
    for (size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.m[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

std::pair<IPoly, int> IPoly::substitute(size_t idx, const Rat& val) const {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  const int emax = degree_in(idx);
  const Int a = numerator(val), b = denominator(val);
  IPoly r(ps_);
  for (const Term& t : t_) {
    Term nt = t;
    int e = nt.m[idx];
    nt.m[idx] = 0;
    Int f = 1;
    for (int k = 0; k < e; ++k) f *= a;
    for (int k = e; k < emax; ++k) f *= b;
    nt.c *= f;
    r.t_.push_back(std::move(nt));
  }
  r.normalize();
  return {std::move(r), emax};
}

IPoly IPoly::substitute_poly(size_t idx, const IPoly& val) const {
  check_same(ps_, val.params());
  IPoly r(ps_);
  for (const Term& t : t_) {
    Term nt = t;
    int e = nt.m[idx];
    nt.m[idx] = 0;
    IPoly part = IPoly::monomial(ps_, nt.m, nt.c);
    if (e > 0) part = part * val.pow(static_cast<unsigned>(e));
    r += part;
  }
  return r;
}

IPoly IPoly::divide_exact_univ(const IPoly& d, size_t idx) const {
  require(!d.is_zero(), "division by zero polynomial");
  IPoly rem(*this);
  IPoly quot(ps_);
  const int dd = d.degree_in(idx);
  const Int dl = [&] {  // leading coefficient of d in idx
    for (const Term& t : d.t_)
      if (t.m[idx] == dd) return t.c;
    return Int(0);
  }();
  while (!rem.is_zero()) {
    int rd = rem.degree_in(idx);
    require(rd >= dd, "inexact univariate division (degree)");
    // leading coefficient of rem in idx (sum over terms of top idx-degree
    // is a single term for univariate polys)
    Int rl = 0;
    for (const Term& t : rem.t_)
      if (t.m[idx] == rd) rl = t.c;
    require(rl % dl == 0, "inexact univariate division (coefficient)");
    Mono m(ps_->size(), 0);
    m[idx] = rd - dd;
    IPoly q = IPoly::monomial(ps_, m, rl / dl);
    quot += q;
    rem -= q * d;
    require(rem.is_zero() || rem.degree_in(idx) < rd, "univariate division stalled");
  }
  return quot;
}

IPoly IPoly::gcd_univ(const IPoly& a, const IPoly& b, size_t idx) {
  // primitive Euclidean algorithm on integer univariate polynomials
  auto primitive = [](IPoly p) {
    Int c = p.int_content();
    if (c > 1) p.divide_int(c);
    if (!p.is_zero() && p.lead().c < 0)
      for (auto& t : p.mutable_terms()) t.c = -t.c;
    return p;
  };
  IPoly f = primitive(a), g = primitive(b);
  while (!g.is_zero()) {
    // pseudo-remainder of f by g in variable idx
    int df = f.degree_in(idx), dg = g.degree_in(idx);
    if (df < dg) {
      std::swap(f, g);
      continue;
    }
    Int gl = 0;
    for (const Term& t : g.terms())
      if (t.m[idx] == dg) gl = t.c;
    IPoly r = f;
    while (!r.is_zero() && r.degree_in(idx) >= dg) {
      int rd = r.degree_in(idx);
      Int rl = 0;
      for (const Term& t : r.terms())
        if (t.m[idx] == rd) rl = t.c;
      Mono m(f.params()->size(), 0);
      m[idx] = rd - dg;
      r = r.mul_int(gl) - IPoly::monomial(f.params(), m, rl) * g;
      r = primitive(r);
      if (r.is_zero()) break;
      if (r.degree_in(idx) == rd) break;  // no progress; bail to stay safe
    }
    f = g;
    g = primitive(r);
    if (!g.is_zero() && g.degree_in(idx) >= f.degree_in(idx) && f.degree_in(idx) == 0)
      break;
  }
  return primitive(f);
}

std::string IPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : t_) {
    Int c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_vars = mono_total_degree(t.m) > 0;
    bool coeff_shown = (c != 1) || !has_vars;
    if (coeff_shown) os << c.str();
    bool need_star = coeff_shown;
    for (size_t i = 0; i < t.m.size(); ++i) {
      if (t.m[i] == 0) continue;
      if (need_star) os << "*";
      os << ps_->name(i);
      if (t.m[i] > 1) os << "^" << t.m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace qpencil
