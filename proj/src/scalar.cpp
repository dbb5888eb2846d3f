#include "qpencil/scalar.hpp"

namespace qpencil {

Scalar::Scalar(IPoly num, IPoly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same(num_.params(), den_.params());
  require(!den_.is_zero(), "zero denominator");
  normalize();
}

Scalar Scalar::integer(ParamSetPtr ps, Int k) {
  Scalar s(ps);
  s.num_ = IPoly::constant(ps, std::move(k));
  return s;
}

Scalar Scalar::rational(ParamSetPtr ps, Int num, Int den) {
  return Scalar(IPoly::constant(ps, std::move(num)), IPoly::constant(ps, std::move(den)));
}

Scalar Scalar::rational(ParamSetPtr ps, const Rat& r) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  return rational(std::move(ps), numerator(r), denominator(r));
}

Scalar Scalar::param(ParamSetPtr ps, const std::string& name, int exp) {
  size_t idx = ps->index(name);
  if (exp >= 0) {
    Scalar s(ps);
    s.num_ = exp == 0 ? IPoly::constant(ps, 1) : IPoly::param(ps, idx, exp);
    return s;
  }
  return Scalar(IPoly::constant(ps, 1), IPoly::param(ps, idx, -exp));
}

Scalar Scalar::from_poly(IPoly p) {
  auto ps = p.params();
  return Scalar(std::move(p), IPoly::constant(ps, 1));
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = IPoly::constant(num_.params(), 1);
    return;
  }
  // clear the formal imaginary unit from the denominator
  if (den_.has_imag()) {
    IPoly c = den_.conj_imag();
    num_ *= c;
    den_ *= c;  // now i-free: (p + i r)(p - i r) = p^2 + r^2
  }
  // joint monomial content
  Mono mn = num_.mono_content();
  Mono md = den_.mono_content();
  Mono m(mn.size());
  bool any = false;
  for (size_t i = 0; i < m.size(); ++i) {
    m[i] = std::min(mn[i], md[i]);
    any = any || m[i] > 0;
  }
  if (any) {
    num_.divide_mono(m);
    den_.divide_mono(m);
  }
  // joint integer content
  Int g = boost::multiprecision::gcd(num_.int_content(), den_.int_content());
  if (g > 1) {
    num_.divide_int(g);
    den_.divide_int(g);
  }
  // univariate gcd reduction when both sides live in one common variable
  int vn = -1, vd = -1;
  if (num_.univariate(vn) && den_.univariate(vd)) {
    int v = vn >= 0 ? vn : vd;
    if (v >= 0 && (vn < 0 || vd < 0 || vn == vd) && !den_.is_constant()) {
      IPoly gg = IPoly::gcd_univ(num_, den_, static_cast<size_t>(v));
      if (!gg.is_constant()) {
        num_ = num_.divide_exact_univ(gg, static_cast<size_t>(v));
        den_ = den_.divide_exact_univ(gg, static_cast<size_t>(v));
      }
    }
  }
  // positive leading denominator coefficient
  if (den_.lead().c < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(params(), o.params());
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(params(), o.params());
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(params(), o.params());
  require(!o.is_zero(), "scalar division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::inverse() const {
  require(!is_zero(), "inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::one(params());
  Scalar b(*this);
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1) r *= b;
    u >>= 1;
    if (u) b *= b;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(params(), o.params());
  return num_ * o.den_ == o.num_ * den_;
}

Scalar Scalar::conj_imag() const {
  if (params()->imag_index() < 0) return *this;
  return Scalar(num_.conj_imag(), den_.conj_imag());
}

Rat Scalar::eval(const std::map<std::string, Rat>& point) const {
  const ParamSet& ps = *params();
  std::vector<Rat> vec(ps.size(), Rat(0));
  for (size_t i = 0; i < ps.size(); ++i) {
    auto it = point.find(ps.name(i));
    if (it != point.end()) {
      vec[i] = it->second;
    } else {
      require(!num_.occurs(i) && !den_.occurs(i),
              "evaluation point missing parameter: " + ps.name(i));
    }
  }
  Rat d = den_.eval(vec);
  require(d != 0, "denominator vanishes at evaluation point: " + den_.to_string());
  return num_.eval(vec) / d;
}

Scalar Scalar::substitute(const std::string& name, const Rat& val) const {
  size_t idx = params()->index(name);
  auto [n, kn] = num_.substitute(idx, val);
  auto [d, kd] = den_.substitute(idx, val);
  require(!d.is_zero(), "substitution makes denominator vanish: " + den_.to_string());
  using boost::multiprecision::denominator;
  Int b = denominator(val);
  // value = (n / b^kn) / (d / b^kd) = n * b^kd / (d * b^kn)
  Int bn = 1, bd = 1;
  for (int i = 0; i < kd; ++i) bn *= b;
  for (int i = 0; i < kn; ++i) bd *= b;
  return Scalar(n.mul_int(bn), d.mul_int(bd));
}

Scalar Scalar::substitute(const std::string& name, const Scalar& val) const {
  check_same(params(), val.params());
  size_t idx = params()->index(name);
  int en = num_.degree_in(idx), ed = den_.degree_in(idx);
  int e = std::max(en, ed);
  // clear val's denominator: x := vn/vd; multiply num and den by vd^e
  IPoly n(IPoly::zero(params())), d(IPoly::zero(params()));
  auto lift = [&](const IPoly& p) {
    IPoly acc = IPoly::zero(params());
    for (const IPoly::Term& t : p.terms()) {
      IPoly::Term nt = t;
      int k = nt.m[idx];
      nt.m[idx] = 0;
      IPoly part = IPoly::monomial(params(), nt.m, nt.c);
      part = part * val.num().pow(static_cast<unsigned>(k)) *
             val.den().pow(static_cast<unsigned>(e - k));
      acc += part;
    }
    return acc;
  };
  n = lift(num_);
  d = lift(den_);
  require(!d.is_zero(), "substitution makes denominator vanish");
  return Scalar(std::move(n), std::move(d));
}

std::string Scalar::to_string() const {
  std::string s = "(" + num_.to_string() + ")";
  if (!(den_.is_constant() && den_.constant_value() == 1))
    s += "/(" + den_.to_string() + ")";
  return s;
}

}  // namespace qpencil
