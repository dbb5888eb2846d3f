#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpencil/cpoly.hpp"
#include "qpencil/ncpoly.hpp"
#include "qpencil/parser.hpp"
#include "qpencil/scalar.hpp"

using namespace qpencil;

namespace {
ParamSetPtr qset() { return make_params({"q"}); }
ParamSetPtr qhset() { return make_params({"q", "h", "M"}); }
ParamSetPtr iset() { return make_params({"q", "i"}, "i"); }
}  // namespace

TEST_CASE("integer polynomial arithmetic and ordering") {
  auto ps = qhset();
  IPoly q = IPoly::param(ps, 0);
  IPoly h = IPoly::param(ps, 1);
  IPoly one = IPoly::constant(ps, 1);

  CHECK((q + one) * (q - one) == q * q - one);
  CHECK((q + h).to_string() == "q + h");  // grlex: q before h
  CHECK((q * q + q * h + one).to_string() == "q^2 + q*h + 1");
  CHECK((q - q).is_zero());
  CHECK((-(q + one)).to_string() == "-q - 1");
  CHECK(q.pow(3).to_string() == "q^3");

  IPoly p = q * q * h.mul_int(6) + q.mul_int(4);
  CHECK(p.int_content() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  int v = -1;
  CHECK(!p.univariate(v));
  CHECK(q.pow(2).univariate(v));
  CHECK(v == 0);
}

TEST_CASE("scalar normal form") {
  auto ps = qset();
  Scalar q = Scalar::param(ps, "q");
  Scalar qinv = Scalar::param(ps, "q", -1);

  SUBCASE("q + 1/q") {
    Scalar s = q + qinv;
    CHECK(s.to_string() == "(q^2 + 1)/(q)");
  }
  SUBCASE("difference of squares with negative powers") {
    Scalar lhs = (q - qinv) * (q + qinv);
    Scalar rhs = q.pow(2) - q.pow(-2);
    CHECK(lhs == rhs);
    CHECK(lhs.to_string() == "(q^4 - 1)/(q^2)");
  }
  SUBCASE("univariate gcd reduction") {
    Scalar s = (q.pow(2) - Scalar::one(ps)) / (q - Scalar::one(ps));
    CHECK(s == q + Scalar::one(ps));
    CHECK(s.to_string() == "(q + 1)");
  }
  SUBCASE("joint monomial content") {
    Scalar s = q.pow(3) / q.pow(2);
    CHECK(s.to_string() == "(q)");
  }
  SUBCASE("integer content and denominator sign") {
    Scalar s = Scalar::rational(ps, 6, -4);
    CHECK(s.to_string() == "(-3)/(2)");
    CHECK(s == Scalar::rational(ps, Rat(-3) / 2));
  }
  SUBCASE("zero has canonical denominator") {
    Scalar s = q - q;
    CHECK(s.is_zero());
    CHECK(s.to_string() == "(0)");
  }
}

TEST_CASE("scalar evaluation and substitution") {
  auto ps = qhset();
  Scalar q = Scalar::param(ps, "q");
  Scalar s = (q.pow(2) + Scalar::one(ps)) / q;

  CHECK(s.eval({{"q", Rat(3) / 2}}) == Rat(13) / 6);
  CHECK_THROWS_WITH_AS((Scalar::one(ps) / (q - Scalar::one(ps))).eval({{"q", Rat(1)}}),
                       doctest::Contains("denominator vanishes"), Error);
  // missing parameter is only an error when it occurs
  Scalar h = Scalar::param(ps, "h");
  CHECK_THROWS_WITH_AS((q + h).eval({{"q", Rat(2)}}),
                       doctest::Contains("missing parameter: h"), Error);
  CHECK(s.eval({{"q", Rat(2)}, {"h", Rat(5)}}) == Rat(5) / 2);

  CHECK(s.substitute("q", Rat(2)) == Scalar::rational(ps, 5, 2));
  // partial substitution keeps other parameters formal
  Scalar t = q * h + h;
  CHECK(t.substitute("q", Rat(1, 2)).to_string() == "(3*h)/(2)");
  // substitution by a scalar: q := q*h in q^2 + 1
  Scalar u = (q.pow(2) + Scalar::one(ps)).substitute("q", q * h);
  CHECK(u == q.pow(2) * h.pow(2) + Scalar::one(ps));
}

TEST_CASE("formal imaginary unit") {
  auto ps = iset();
  Scalar i = Scalar::param(ps, "i");
  Scalar q = Scalar::param(ps, "q");
  Scalar one = Scalar::one(ps);

  CHECK(i * i == -one);
  CHECK(i.pow(3) == -i);
  CHECK(i.pow(4) == one);
  // denominators are cleared of i: 1/(1+i) = (1-i)/2
  Scalar s = one / (one + i);
  CHECK(s == (one - i) / Scalar::integer(ps, 2));
  CHECK(!s.den().has_imag());
  CHECK(s.conj_imag() == (one + i) / Scalar::integer(ps, 2));
  // (q + i)(q - i) = q^2 + 1
  CHECK((q + i) * (q - i) == q.pow(2) + one);
}

TEST_CASE("scalar parsing round trips") {
  auto ps = qhset();
  Scalar q = Scalar::param(ps, "q");
  Scalar h = Scalar::param(ps, "h");

  CHECK(parse_scalar(ps, "(q^2 + 1)/(q)") == q + q.inverse());
  CHECK(parse_scalar(ps, "q^-1") == q.inverse());
  CHECK(parse_scalar(ps, "-q^2*h + 3/2") == -q.pow(2) * h + Scalar::rational(ps, 3, 2));
  CHECK(parse_scalar(ps, "2 - - 3") == Scalar::integer(ps, 5));
  Scalar s = (q - q.inverse()) * (q + q.inverse()) / (h + Scalar::one(ps));
  CHECK(parse_scalar(ps, s.to_string()) == s);
  CHECK_THROWS_WITH_AS(parse_scalar(ps, "q + x"), doctest::Contains("unknown symbol 'x'"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_scalar(ps, "q + "), doctest::Contains("unexpected end"), Error);
  CHECK_THROWS_WITH_AS(parse_scalar(ps, "(q"), doctest::Contains("missing ')'"), Error);
}

TEST_CASE("commutative polynomials over matrix generators") {
  auto ps = qset();
  auto gens = matrix_gens(2);
  REQUIRE(gens->names() == std::vector<std::string>{"a_1^1", "a_1^2", "a_2^1", "a_2^2"});

  // a_1^2 parses as one generator, q^2 as a power
  CPoly p = parse_cpoly(gens, ps, "a_1^2*a_2^1 - q*a_2^1*a_1^2");
  Scalar q = Scalar::param(ps, "q");
  CPoly expect = CPoly::gen(gens, ps, 1) * CPoly::gen(gens, ps, 2);
  expect = expect.scaled(Scalar::one(ps) - q);
  CHECK(p == expect);
  CHECK(p.to_string() == "(-q + 1)*a_1^2*a_2^1");

  CPoly r = parse_cpoly(gens, ps, "(a_1^1 + a_2^2)^2");
  CHECK(r.terms().size() == 3);
  CHECK(r.total_degree() == 2);
  CHECK(parse_cpoly(gens, ps, r.to_string()) == r);

  // derivative
  CPoly d = r.derivative(0);
  CHECK(d == parse_cpoly(gens, ps, "2*a_1^1 + 2*a_2^2"));
}

TEST_CASE("free algebra elements") {
  auto ps = qset();
  auto gens = make_gens({"x", "y"});
  NCPoly x = NCPoly::gen(gens, ps, 0);
  NCPoly y = NCPoly::gen(gens, ps, 1);

  NCPoly c = x * y - y * x;
  CHECK(c.terms().size() == 2);
  CHECK(!c.is_zero());
  CHECK(c.to_commutative().is_zero());
  CHECK(c.to_string() == "x*y - y*x");
  CHECK(parse_ncpoly(gens, ps, "x*y - y*x") == c);
  CHECK(parse_ncpoly(gens, ps, "(x + y)^2") == x * x + x * y + y * x + y * y);

  Scalar q = Scalar::param(ps, "q");
  NCPoly w = x * y.scaled(q) - y * x.scaled(q.inverse());
  CHECK(parse_ncpoly(gens, ps, "q*x*y - q^-1*y*x") == w);
  CHECK(w.max_degree() == 2);
  CHECK(w.homogeneous());

  CHECK_THROWS_WITH_AS(parse_ncpoly(gens, ps, "x/y"),
                       doctest::Contains("division by a non-scalar"), Error);
}

TEST_CASE("word enumeration is lex ascending and rank-consistent") {
  auto ws = all_words(3, 2);
  REQUIRE(ws.size() == 9);
  CHECK(ws.front() == Word{0, 0});
  CHECK(ws[1] == Word{0, 1});
  CHECK(ws.back() == Word{2, 2});
  for (size_t k = 0; k < ws.size(); ++k) CHECK(word_rank(3, ws[k]) == k);
  CHECK(all_words(2, 0) == std::vector<Word>{Word{}});
}
