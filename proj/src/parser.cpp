#include "qpencil/parser.hpp"

#include <cctype>
#include <optional>

namespace qpencil {
namespace {

// A parse-time value that can hold either flavour of polynomial; the three
// public entry points instantiate the machinery with the right environment.
template <class V>
struct Env {
  std::function<V(Int)> from_int;
  std::function<std::optional<V>(const std::string&)> lookup;
  std::function<V(const V&, int)> power;
  std::function<V(const V&, const V&)> divide;
};

template <class V>
class Parser {
 public:
  Parser(const std::string& s, const Env<V>& env) : s_(s), env_(env) {}

  V parse() {
    V v = expr();
    skip();
    require(pos_ == s_.size(), "unexpected trailing input at position " +
                                   std::to_string(pos_) + " in: " + s_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Int integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    require(pos_ > start, "expected integer at position " + std::to_string(start) +
                              " in: " + s_);
    return Int(s_.substr(start, pos_ - start));
  }

  // Identifier with optional greedy '^<digits>' extensions resolved against
  // the symbol table (so a_1^2 is one name but q^2 is a power).
  V name_value() {
    skip();
    size_t start = pos_;
    require(pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'),
            "expected name at position " + std::to_string(pos_) + " in: " + s_);
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string base = s_.substr(start, pos_ - start);
    // try to greedily extend across '^<digits>' segments
    while (pos_ < s_.size() && s_[pos_] == '^') {
      size_t save = pos_;
      ++pos_;
      size_t dstart = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string ext = base + "^" + s_.substr(dstart, pos_ - dstart);
      if (pos_ > dstart && env_.lookup(ext).has_value()) {
        base = ext;
      } else {
        pos_ = save;
        break;
      }
    }
    auto v = env_.lookup(base);
    require(v.has_value(), "unknown symbol '" + base + "' in: " + s_);
    return *v;
  }

  V primary() {
    skip();
    require(pos_ < s_.size(), "unexpected end of input in: " + s_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      require(eat(')'), "missing ')' in: " + s_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return env_.from_int(integer());
    return name_value();
  }

  V factor() {
    if (eat('-')) {
      V v = factor();
      return env_.from_int(-1) * v;
    }
    V v = primary();
    while (peek() == '^') {
      ++pos_;
      bool neg = eat('-');
      Int e = integer();
      require(e <= 64, "exponent too large in: " + s_);
      int ei = static_cast<int>(e);
      v = env_.power(v, neg ? -ei : ei);
    }
    return v;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (peek() == '-') {
        ++pos_;
        v = v - term();
      } else
        break;
    }
    return v;
  }

  V term() {
    V v = factor();
    for (;;) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = env_.divide(v, factor());
      else
        break;
    }
    return v;
  }

  const std::string& s_;
  const Env<V>& env_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const ParamSetPtr& ps, const std::string& text) {
  Env<Scalar> env;
  env.from_int = [&](Int k) { return Scalar::integer(ps, std::move(k)); };
  env.lookup = [&](const std::string& n) -> std::optional<Scalar> {
    if (ps->find(n) < 0) return std::nullopt;
    return Scalar::param(ps, n);
  };
  env.power = [](const Scalar& v, int e) { return v.pow(e); };
  env.divide = [](const Scalar& a, const Scalar& b) { return a / b; };
  return Parser<Scalar>(text, env).parse();
}

CPoly parse_cpoly(const GenSetPtr& gens, const ParamSetPtr& ps, const std::string& text) {
  Env<CPoly> env;
  env.from_int = [&](Int k) {
    return CPoly::from_scalar(gens, Scalar::integer(ps, std::move(k)));
  };
  env.lookup = [&](const std::string& n) -> std::optional<CPoly> {
    if (gens->find(n) >= 0) return CPoly::gen(gens, ps, gens->index(n));
    if (ps->find(n) >= 0) return CPoly::from_scalar(gens, Scalar::param(ps, n));
    return std::nullopt;
  };
  env.power = [&](const CPoly& v, int e) {
    if (e >= 0) return v.pow(static_cast<unsigned>(e));
    return CPoly::from_scalar(gens, v.scalar_value().pow(e));
  };
  env.divide = [](const CPoly& a, const CPoly& b) {
    return a.scaled(b.scalar_value().inverse());
  };
  return Parser<CPoly>(text, env).parse();
}

NCPoly parse_ncpoly(const GenSetPtr& gens, const ParamSetPtr& ps, const std::string& text) {
  Env<NCPoly> env;
  env.from_int = [&](Int k) {
    return NCPoly::from_scalar(gens, Scalar::integer(ps, std::move(k)));
  };
  env.lookup = [&](const std::string& n) -> std::optional<NCPoly> {
    if (gens->find(n) >= 0) return NCPoly::gen(gens, ps, gens->index(n));
    if (ps->find(n) >= 0) return NCPoly::from_scalar(gens, Scalar::param(ps, n));
    return std::nullopt;
  };
  env.power = [&](const NCPoly& v, int e) {
    if (e < 0) {
      // only scalar values may carry negative powers
      require(v.max_degree() <= 0, "negative power of a non-scalar word");
      Scalar s = v.is_zero() ? Scalar::zero(ps) : v.terms()[0].c;
      return NCPoly::from_scalar(gens, s.pow(e));
    }
    NCPoly r = NCPoly::from_scalar(gens, Scalar::one(ps));
    for (int i = 0; i < e; ++i) r *= v;
    return r;
  };
  env.divide = [&](const NCPoly& a, const NCPoly& b) {
    require(b.max_degree() <= 0, "division by a non-scalar polynomial");
    Scalar s = b.is_zero() ? Scalar::zero(ps) : b.terms()[0].c;
    return a.scaled(s.inverse());
  };
  return Parser<NCPoly>(text, env).parse();
}

}  // namespace qpencil
