// Star structures on the deformed bracket: reduced elimination bases over
// the matrix-entry unknowns, the sign-diagonal classification, two-point
// certificates for the unrestricted real scan at generic parameter values,
// a rotation that is admissible only at the classical point, and the
// structure of the odd part.
//
// Frozen values were derived by hand: the first incompatible pair for the
// identity candidate, the two surviving sign diagonals, the elimination
// bases of the small ideals, and the odd bases {v, iu, iw} (mixed-sign
// diagonal) and {u, v, w} (negated identity).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qpencil/conjugation.hpp"
#include "qpencil/parser.hpp"

using namespace qpencil;

namespace {

ParamSetPtr P() {
  static ParamSetPtr ps =
      make_params({"q", "h", "M", "c0", "c1", "J12", "J23", "J31", "i"}, "i");
  return ps;
}

Scalar S(const std::string& text) { return parse_scalar(P(), text); }

LinOp diag3(int a, int b, int c) {
  LinOp t(3, 3, P());
  t.set(0, 0, Scalar::integer(P(), a));
  t.set(1, 1, Scalar::integer(P(), b));
  t.set(2, 2, Scalar::integer(P(), c));
  return t;
}

}  // namespace

TEST_CASE("elimination bases reduce known ideals") {
  const GenSetPtr g2 = make_gens({"x", "y"});
  const CPoly x = CPoly::gen(g2, P(), 0);
  const CPoly y = CPoly::gen(g2, P(), 1);
  const CPoly one = CPoly::from_scalar(g2, Scalar::one(P()));

  // (x^2 - 1, xy - 1) has the reduced basis {x - y, y^2 - 1}.
  const auto gb = groebner_basis({x * x - one, x * y - one});
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == x - y);
  CHECK(gb[1] == y * y - one);
  CHECK(gb_contains(gb, (x + y) * (x - y)));
  CHECK(gb_contains(gb, x * x * y - y));
  CHECK_FALSE(gb_contains(gb, x + one));

  // Inconsistent generators collapse to the unit ideal.
  const auto unit = groebner_basis({x, x + one});
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_scalar());
  CHECK(unit[0] == one);
  CHECK(gb_contains(unit, y));

  // Circle intersected with the diagonal: remainders carry exact rationals.
  const auto circ = groebner_basis({x * x + y * y - one, x - y});
  REQUIRE(circ.size() == 2);
  CHECK(circ[0] == x - y);
  CHECK(circ[1] == y * y - CPoly::from_scalar(g2, S("1/2")));
  CHECK(gb_reduce(x * x, circ) == CPoly::from_scalar(g2, S("1/2")));
}

TEST_CASE("conjugation candidates divide into compatible and incompatible") {
  const QLieBracket br = q_lie_bracket(P());

  CHECK(conjugation_check(br.bracket, diag3(-1, -1, -1)).ok());
  CHECK(conjugation_check(br.bracket, diag3(1, -1, 1)).ok());

  // The identity is real and involutive but breaks anti-multiplicativity
  // already on the first nonzero bracket.
  const ConjugationReport idrep =
      conjugation_check(br.bracket, LinOp::identity(3, P()));
  CHECK(idrep.real);
  CHECK(idrep.involutive);
  CHECK_FALSE(idrep.compatible);
  CHECK(idrep.violation == "(u, v)");

  // An imaginary diagonal squares to the identity as an antilinear map but
  // is rejected as non-real.
  LinOp imag(3, 3, P());
  imag.set(0, 0, S("i"));
  imag.set(1, 1, S("-1"));
  imag.set(2, 2, S("i"));
  const ConjugationReport imrep = conjugation_check(br.bracket, imag);
  CHECK_FALSE(imrep.real);
  CHECK(imrep.involutive);
  CHECK_FALSE(imrep.ok());
}

TEST_CASE("a rotation is admissible only at the classical point") {
  const QLieBracket br = q_lie_bracket(P());

  // u -> -w, v -> v, w -> -u.
  LinOp t1(3, 3, P());
  t1.set(2, 0, S("-1"));
  t1.set(1, 1, S("1"));
  t1.set(0, 2, S("-1"));

  const LinOp classical = op_substituted(br.bracket, "q", Rat(1));
  CHECK(conjugation_check(classical, t1).ok());

  const ConjugationReport sym = conjugation_check(br.bracket, t1);
  CHECK(sym.real);
  CHECK(sym.involutive);
  CHECK_FALSE(sym.compatible);
  CHECK(sym.violation == "(u, v)");
}

TEST_CASE("sign diagonals classify to exactly two conjugations") {
  const QLieBracket br = q_lie_bracket(P());
  const std::vector<LinOp> found = classify_diagonal_conjugations(br.bracket);
  REQUIRE(found.size() == 2);
  CHECK(found[0] == diag3(-1, -1, -1));
  CHECK(found[1] == diag3(1, -1, 1));
}

TEST_CASE("the full matrix scan certifies two solutions at generic values") {
  const QLieBracket br = q_lie_bracket(P());
  for (const Rat& q0 : {Rat(2), Rat(3), Rat(5) / Rat(2)}) {
    const ConjugationScan scan = conjugation_scan_at(br, q0);
    CHECK(scan.q == q0);
    CHECK_FALSE(scan.collapsed);
    CHECK(scan.residuals.empty());
    CHECK(scan.two_point_certified);
    // A zero-dimensional solution set needs a pure power of every unknown
    // among the leading terms.
    CHECK(scan.basis_size >= 9);
  }
}

TEST_CASE("the scan at the classical point is honestly uncertified") {
  const QLieBracket br = q_lie_bracket(P());
  const ConjugationScan scan = conjugation_scan_at(br, Rat(1));
  CHECK_FALSE(scan.collapsed);
  CHECK_FALSE(scan.two_point_certified);
  CHECK_FALSE(scan.residuals.empty());
  for (const std::string& r : scan.residuals) CHECK_FALSE(r.empty());
}

TEST_CASE("odd parts close under the bracket") {
  const QLieBracket br = q_lie_bracket(P());

  // Mixed-sign diagonal: odd part {v, iu, iw}.
  const LinOp mixed = diag3(1, -1, 1);
  const OddSubalgebraReport rep = odd_subalgebra_check(br.bracket, mixed, P());
  REQUIRE(rep.odd_basis.size() == 3);
  CHECK(sv_equal(rep.odd_basis[0], {{1, S("1")}}));
  CHECK(sv_equal(rep.odd_basis[1], {{0, S("i")}}));
  CHECK(sv_equal(rep.odd_basis[2], {{2, S("i")}}));
  CHECK(rep.odd_closed);
  CHECK(rep.even_closed_under_i);

  // Negated identity: every real element is odd.
  const OddSubalgebraReport all =
      odd_subalgebra_check(br.bracket, diag3(-1, -1, -1), P());
  REQUIRE(all.odd_basis.size() == 3);
  CHECK(sv_equal(all.odd_basis[0], {{0, S("1")}}));
  CHECK(all.odd_closed);
  CHECK(all.even_closed_under_i);

  // Formal-imaginary tracking: star(iu) = -iu for the mixed diagonal, and
  // the odd bracket sample [v, iu] = i M u is odd again.
  const SparseVec iu = {{0, S("i")}};
  CHECK(sv_equal(mixed.apply(sv_conj(iu)), sv_scaled(iu, S("-1"))));
  const SparseVec sample = sv_scaled(br.bracket.col(3), S("i"));  // i [v, u]
  CHECK(sv_equal(sample, {{0, S("i*M")}}));
  CHECK(sv_equal(mixed.apply(sv_conj(sample)), sv_scaled(sample, S("-1"))));

  // A non-compatible candidate is rejected outright.
  CHECK_THROWS_WITH_AS(
      odd_subalgebra_check(br.bracket, LinOp::identity(3, P()), P()),
      "odd subalgebra: the conjugation must be real, involutive, and "
      "compatible with the bracket",
      Error);
}
