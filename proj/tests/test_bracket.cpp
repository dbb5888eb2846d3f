// Bracket tables: catalog entries, biderivation extension, Jacobi and
// compatibility identities, shift/linearization, file loading, and the
// tensor-cube defect computations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qpencil/bracket.hpp"
#include "qpencil/lie.hpp"
#include "qpencil/parser.hpp"

using namespace qpencil;

namespace {

ParamSetPtr P() {
  static ParamSetPtr ps =
      make_params({"q", "h", "M", "c0", "c1", "J12", "J23", "J31", "i"}, "i");
  return ps;
}

CPoly cp(const GenSetPtr& g, const std::string& s) {
  return parse_cpoly(g, P(), s);
}

// Shift data hitting exactly the diagonal matrix coordinates.
std::vector<Scalar> diag_shift(int n) {
  std::vector<Scalar> d(static_cast<size_t>(n) * n, Scalar::zero(P()));
  for (int i = 0; i < n; ++i)
    d[static_cast<size_t>(i) * n + i] = Scalar::one(P());
  return d;
}

}  // namespace

TEST_CASE("quadratic matrix bracket: generator table") {
  BracketTable t = sklyanin2(2, P());
  auto g = t.gens();
  CHECK(t.entry(0, 1) == cp(g, "a_1^1*a_1^2"));  // same row
  CHECK(t.entry(0, 2) == cp(g, "a_1^1*a_2^1"));  // same column
  CHECK(t.entry(1, 2).is_zero());                // contra-oriented pair
  CHECK(t.entry(0, 3) == cp(g, "2*a_1^2*a_2^1"));
  CHECK(t.entry(1, 3) == cp(g, "a_1^2*a_2^2"));
  CHECK(t.entry(2, 3) == cp(g, "a_2^1*a_2^2"));
  // Antisymmetry is built in.
  CHECK(t.entry(1, 0) == cp(g, "-a_1^1*a_1^2"));
  CHECK(t.entry(3, 0) == cp(g, "-2*a_1^2*a_2^1"));
}

TEST_CASE("biderivation extension satisfies the Leibniz rule") {
  BracketTable t = sklyanin2(2, P());
  auto g = t.gens();
  CPoly x = cp(g, "a_1^1"), y = cp(g, "a_1^2");
  CHECK(t.eval(x, y * y) == cp(g, "2*a_1^1*a_1^2^2"));
  // {x, y*z} = {x,y} z + y {x,z} on a mixed product.
  CPoly z = cp(g, "a_2^2");
  CHECK(t.eval(x, y * z) == t.eval(x, y) * z + y * t.eval(x, z));
  // Scalars are central.
  CHECK(t.eval(CPoly::from_scalar(g, Scalar::param(P(), "q")), y).is_zero());
}

TEST_CASE("Jacobi identity for the catalog brackets") {
  CHECK(jacobi_failures(sklyanin2(2, P())).empty());
  CHECK(jacobi_failures(sklyanin2(3, P())).empty());
  CHECK(jacobi_failures(linear1(2, P())).empty());
  CHECK(jacobi_failures(linear1(3, P())).empty());
  CHECK(jacobi_failures(gl_bracket(2, P())).empty());
  CHECK(jacobi_failures(gl_bracket(3, P())).empty());
  CHECK(jacobi_failures(kks_sl2(P())).empty());
  CHECK(jacobi_failures(rmat_sl2(P())).empty());
}

TEST_CASE("quadratic/linear matrix brackets form a compatible pencil") {
  CHECK(mixed_jacobi_failures(sklyanin2(2, P()), linear1(2, P())).empty());
  CHECK(mixed_jacobi_failures(sklyanin2(3, P()), linear1(3, P())).empty());
  CHECK(mixed_jacobi_failures(kks_sl2(P()), rmat_sl2(P())).empty());
}

TEST_CASE("no product of two diagonal coordinates on quadratic right sides") {
  for (int n = 2; n <= 3; ++n) {
    BracketTable t = sklyanin2(n, P());
    const size_t m = t.gens()->size();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        for (const auto& term : t.entry(i, j).terms()) {
          int diag_power = 0;
          for (int r = 0; r < n; ++r)
            diag_power += term.m[static_cast<size_t>(r) * n + r];
          CHECK(diag_power <= 1);
        }
  }
}

TEST_CASE("shift by the identity linearizes the quadratic bracket") {
  for (int n = 2; n <= 3; ++n) {
    BracketTable t = sklyanin2(n, P());
    ShiftResult r = shift_and_linearize(t, diag_shift(n), "h");
    BracketTable lin = linear1(n, P());
    const size_t m = t.gens()->size();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        CHECK(r.linear.entry(i, j) == lin.entry(i, j));
    // The shifted table is the original plus h times the linear one.
    const Scalar h = Scalar::param(P(), "h");
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        CHECK(r.shifted.entry(i, j) ==
              t.entry(i, j) + lin.entry(i, j).map_coeffs([&](const Scalar& c) {
                return c * h;
              }));
  }
}

TEST_CASE("shift rejects tables that leave the degree-one window") {
  auto g = make_gens({"x", "y"});
  BracketTable t(g, P());
  t.set(0, 1, cp(g, "x*y"));
  std::vector<Scalar> both = {Scalar::one(P()), Scalar::one(P())};
  CHECK_THROWS_WITH_AS(shift_and_linearize(t, both, "h"),
                       doctest::Contains("degree above 1"), Error);

  BracketTable bad(g, P());
  bad.set(0, 1, cp(g, "h*x"));
  CHECK_THROWS_WITH_AS(shift_and_linearize(bad, both, "h"),
                       doctest::Contains("already involves"), Error);
}

TEST_CASE("linear matrix bracket is the sign-twist of the gl bracket") {
  CHECK(r_twisted_check(2, P()));
  CHECK(r_twisted_check(3, P()));
  // Twisting by the all-ones sign pattern would not reproduce it.
  BracketTable lin = linear1(2, P());
  BracketTable glb = gl_bracket(2, P());
  CHECK(lin.entry(0, 1) != glb.entry(0, 1).scaled(Scalar::integer(P(), 2)));

  auto sg = row_column_signs(2);
  CHECK(sg == std::vector<int>({0, 1, -1, 0}));
}

TEST_CASE("four-generator bracket: Jacobi conditions on the J parameters") {
  auto cons = elliptic_constraints(P());
  REQUIRE(cons.size() == 1);
  CHECK(cons[0].to_string() == "J12 + J23 + J31");

  // On the constraint surface the identity holds ...
  const Scalar j12 = Scalar::param(P(), "J12"), j23 = Scalar::param(P(), "J23");
  BracketTable onsurf =
      elliptic_bracket(P()).map_coeffs([&](const Scalar& c) {
        return c.substitute("J31", -j12 - j23);
      });
  CHECK(jacobi_failures(onsurf).empty());
  // ... and off it, it fails.
  BracketTable off = elliptic_bracket(P()).map_coeffs([](const Scalar& c) {
    return c.substitute("J12", Rat(1))
        .substitute("J23", Rat(1))
        .substitute("J31", Rat(1));
  });
  CHECK(!jacobi_failures(off).empty());
}

TEST_CASE("four-generator bracket: shift along S0 gives the rotation algebra") {
  const Scalar j12 = Scalar::param(P(), "J12"), j23 = Scalar::param(P(), "J23");
  BracketTable t = elliptic_bracket(P()).map_coeffs([&](const Scalar& c) {
    return c.substitute("J31", -j12 - j23);
  });
  std::vector<Scalar> sh(4, Scalar::zero(P()));
  sh[0] = Scalar::one(P());
  ShiftResult r = shift_and_linearize(t, sh, "h");
  auto g = t.gens();
  // S0 becomes central, the others close like so(3).
  CHECK(r.linear.entry(1, 0).is_zero());
  CHECK(r.linear.entry(2, 0).is_zero());
  CHECK(r.linear.entry(3, 0).is_zero());
  CHECK(r.linear.entry(1, 2) == cp(g, "-2*S3"));
  CHECK(r.linear.entry(2, 3) == cp(g, "-2*S1"));
  CHECK(r.linear.entry(3, 1) == cp(g, "-2*S2"));
  CHECK(jacobi_failures(r.linear).empty());
  CHECK(mixed_jacobi_failures(t, r.linear).empty());
}

TEST_CASE("catalog lookup and table files") {
  BracketTable t = bracket_catalog("sklyanin2(2)", P());
  CHECK(t.gens()->size() == 4);
  CHECK(bracket_catalog("elliptic", P()).gens()->size() == 4);
  CHECK(bracket_catalog("kks(sl2)", P()).gens()->name(0) == "H");
  CHECK(bracket_catalog("rmat(sl2)", P()).max_entry_degree() == 2);
  CHECK(bracket_catalog("linear1(3)", P()).max_entry_degree() == 1);
  CHECK_THROWS_WITH_AS(bracket_catalog("frobnicate", P()),
                       doctest::Contains("unknown bracket catalog"), Error);
  CHECK_THROWS_WITH_AS(bracket_catalog("sklyanin2(x)", P()),
                       doctest::Contains("bad size argument"), Error);

  const std::string path = "bracket_table_test.txt";
  {
    std::ofstream out(path);
    out << "# three-dimensional linear bracket\n";
    out << "gens: H X Y\n";
    out << "{H,X} = 2*X\n";
    out << "{H,Y} = -2*Y\n";
    out << "{X,Y} = H\n";
  }
  BracketTable loaded = load_bracket_table(path, P());
  BracketTable ref = kks_sl2(P());
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      CHECK(loaded.entry(i, j) == ref.entry(i, j));

  {
    std::ofstream out(path);
    out << "gens: H X Y\n{H,Z} = X\n";
  }
  CHECK_THROWS_WITH_AS(load_bracket_table(path, P()),
                       doctest::Contains("unknown generator 'Z'"), Error);
  {
    std::ofstream out(path);
    out << "gens: H X Y\n{H,X} = X\n{X,H} = -X\n";
  }
  CHECK_THROWS_WITH_AS(load_bracket_table(path, P()),
                       doctest::Contains("duplicate bracket entry"), Error);
  {
    std::ofstream out(path);
    out << "{H,X} = X\n";
  }
  CHECK_THROWS_WITH_AS(load_bracket_table(path, P()),
                       doctest::Contains("must declare generators"), Error);
  CHECK_THROWS_WITH_AS(load_bracket_table("no_such_file.txt", P()),
                       doctest::Contains("cannot open"), Error);
  std::remove(path.c_str());
}

TEST_CASE("coefficient extraction by parameter power") {
  Scalar q = Scalar::param(P(), "q"), h = Scalar::param(P(), "h");
  Scalar s = (Scalar::integer(P(), 3) * h * h + Scalar::integer(P(), 2) * h * q +
              Scalar::integer(P(), 5)) /
             q;
  CHECK(scalar_coeff_of(s, "h", 0) == Scalar::integer(P(), 5) / q);
  CHECK(scalar_coeff_of(s, "h", 1) == Scalar::integer(P(), 2));
  CHECK(scalar_coeff_of(s, "h", 2) == Scalar::integer(P(), 3) / q);
  CHECK(scalar_coeff_of(s, "h", 3).is_zero());
  CHECK_THROWS_WITH_AS(scalar_coeff_of(Scalar::one(P()) / h, "h", 0),
                       doctest::Contains("denominator involves"), Error);
}

TEST_CASE("three-dimensional algebra: structure data and adjoint operators") {
  LieData L = sl2_lie(P());
  CHECK(L.dim() == 3);
  // [H,X] = 2X
  CHECK(L.bracket(0, 1)[1] == Scalar::integer(P(), 2));
  LinOp adH = L.ad(0);
  CHECK(adH.get(1, 1) == Scalar::integer(P(), 2));
  CHECK(adH.get(2, 2) == Scalar::integer(P(), -2));
  CHECK(adH.trace().is_zero());
  // bracket_vec on mixed vectors: [X+Y, H] = -2X + 2Y.
  std::vector<Scalar> xpy = {Scalar::zero(P()), Scalar::one(P()), Scalar::one(P())};
  std::vector<Scalar> hh = {Scalar::one(P()), Scalar::zero(P()), Scalar::zero(P())};
  auto v = L.bracket_vec(xpy, hh);
  CHECK(v[0].is_zero());
  CHECK(v[1] == Scalar::integer(P(), -2));
  CHECK(v[2] == Scalar::integer(P(), 2));
}

TEST_CASE("eight-dimensional algebra from matrix commutators") {
  LieData L = sl3_lie(P());  // construction re-checks Jacobi internally
  CHECK(L.dim() == 8);
  auto one = Scalar::one(P());
  // [E12, F21] = H1
  CHECK(L.bracket(2, 5)[0] == one);
  for (size_t k = 1; k < 8; ++k) CHECK(L.bracket(2, 5)[k].is_zero());
  // [E12, E23] = E13
  CHECK(L.bracket(2, 4)[3] == one);
  // [H1, E12] = 2 E12
  CHECK(L.bracket(0, 2)[2] == Scalar::integer(P(), 2));
  // [H1, E23] = -E23
  CHECK(L.bracket(0, 4)[4] == Scalar::integer(P(), -1));
}

TEST_CASE("triangle-identity defect: fully antisymmetric invariant cube") {
  LieData L = sl2_lie(P());
  CybeReport rep = cybe_defect(L, L.standard_r());
  CHECK(!rep.zero);
  CHECK(rep.alternating);
  CHECK(rep.invariant);
  // Expected defect: (1/4) alternating sum over permutations of H (x) X (x) Y.
  const Scalar quarter = Scalar::rational(P(), 1, 4);
  SparseVec want;
  auto put = [&](uint32_t a, uint32_t b, uint32_t c, int sign) {
    want.emplace_back((a * 3 + b) * 3 + c,
                      sign > 0 ? quarter : -quarter);
  };
  put(0, 1, 2, +1);
  put(0, 2, 1, -1);
  put(1, 0, 2, -1);
  put(1, 2, 0, +1);
  put(2, 0, 1, +1);
  put(2, 1, 0, -1);
  CHECK(sv_equal(rep.defect, sv_normalized(std::move(want))));

  // Zero input gives a zero defect.
  CybeReport z = cybe_defect(L, {});
  CHECK(z.zero);
  CHECK(z.alternating);
  CHECK(z.invariant);

  // Quadratic scaling in the input.
  CybeReport sc =
      cybe_defect(L, sv_scaled(L.standard_r(), Scalar::integer(P(), 2)));
  CHECK(sv_equal(sc.defect, sv_scaled(rep.defect, Scalar::integer(P(), 4))));
}

TEST_CASE("triangle-identity defect for the eight-dimensional algebra") {
  LieData L = sl3_lie(P());
  CybeReport rep = cybe_defect(L, L.standard_r());
  CHECK(!rep.zero);
  CHECK(rep.alternating);
  CHECK(rep.invariant);
}

TEST_CASE("quadratic sign bracket respects the invariant quadric ideal") {
  OrbitCheckReport rep = rmatrix_bracket_orbit_check(P());
  CHECK(rep.jacobiator_in_ideal);
  CHECK(rep.quadric_central);
  CHECK(rep.control_escapes);
  CHECK(rep.control_witness.find("(X)^2") != std::string::npos);
}
