#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpencil/linalg.hpp"
#include "qpencil/parser.hpp"

using namespace qpencil;

namespace {
ParamSetPtr qset() { return make_params({"q"}); }

SparseVec vec(const ParamSetPtr& ps, const std::vector<std::string>& entries) {
  SparseVec v;
  for (uint32_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == "0") continue;
    v.emplace_back(i, parse_scalar(ps, entries[i]));
  }
  return v;
}
}  // namespace

TEST_CASE("sparse vector arithmetic") {
  auto ps = qset();
  SparseVec a = vec(ps, {"1", "q", "0"});
  SparseVec b = vec(ps, {"0", "-q", "2"});
  CHECK(sv_equal(sv_add(a, b), vec(ps, {"1", "0", "2"})));
  CHECK(sv_equal(sv_scaled(a, Scalar::param(ps, "q")), vec(ps, {"q", "q^2", "0"})));
  CHECK(sv_get(a, 1) != nullptr);
  CHECK(sv_get(a, 2) == nullptr);
  CHECK(sv_equal(sv_combine(a, Scalar::one(ps), b, Scalar::one(ps)),
                 sv_add(a, b)));
}

TEST_CASE("row content normalization clears denominators and content") {
  auto ps = qset();
  SUBCASE("single shared denominator") {
    SparseVec v = vec(ps, {"(q + 1)/(q)", "2/q"});
    v = sv_content_normalized(std::move(v), ps);
    CHECK(sv_equal(v, vec(ps, {"q + 1", "2"})));
  }
  SUBCASE("distinct denominators") {
    SparseVec v = vec(ps, {"1/(q - 1)", "1/(q + 1)"});
    v = sv_content_normalized(std::move(v), ps);
    CHECK(sv_equal(v, vec(ps, {"q + 1", "q - 1"})));
  }
  SUBCASE("integer and monomial content") {
    SparseVec v = vec(ps, {"6*q^2", "4*q"});
    v = sv_content_normalized(std::move(v), ps);
    CHECK(sv_equal(v, vec(ps, {"3*q", "2"})));
  }
  SUBCASE("sign of leading entry") {
    SparseVec v = vec(ps, {"-q", "1"});
    v = sv_content_normalized(std::move(v), ps);
    CHECK(sv_equal(v, vec(ps, {"q", "-1"})));
  }
}

TEST_CASE("subspace echelon form is canonical") {
  auto ps = qset();
  Subspace s(3, ps);
  CHECK(s.insert(vec(ps, {"1", "1", "0"})));
  CHECK(s.insert(vec(ps, {"0", "1", "1"})));
  CHECK(!s.insert(vec(ps, {"1", "2", "1"})));  // dependent
  CHECK(s.dimension() == 2);

  CHECK(s.contains(vec(ps, {"1", "2", "1"})));
  CHECK(s.contains(vec(ps, {"q", "q + 1", "1"})));
  CHECK(!s.contains(vec(ps, {"0", "0", "1"})));

  const auto& rows = s.canonical_rows();
  REQUIRE(rows.size() == 2);
  CHECK(sv_equal(rows[0], vec(ps, {"1", "0", "-1"})));
  CHECK(sv_equal(rows[1], vec(ps, {"0", "1", "1"})));

  // insertion order does not change the canonical form
  Subspace t(3, ps);
  t.insert(vec(ps, {"1", "2", "1"}));
  t.insert(vec(ps, {"q", "q", "0"}));
  CHECK(t.equals(s));
  CHECK(s.contains(t));
  CHECK(t.contains(s));
}

TEST_CASE("subspace operations with parametric entries") {
  auto ps = qset();
  Subspace u(3, ps);
  u.insert(vec(ps, {"1", "q", "0"}));
  Subspace w(3, ps);
  w.insert(vec(ps, {"q", "q^2", "0"}));  // same line
  CHECK(u.equals(w));

  Subspace a(3, ps);
  a.insert(vec(ps, {"1", "0", "0"}));
  a.insert(vec(ps, {"0", "1", "0"}));
  Subspace b(3, ps);
  b.insert(vec(ps, {"0", "1", "0"}));
  b.insert(vec(ps, {"0", "0", "1"}));

  Subspace cap = a.intersect(b);
  CHECK(cap.dimension() == 1);
  CHECK(cap.contains(vec(ps, {"0", "1", "0"})));

  Subspace tot = a.sum(b);
  CHECK(tot.dimension() == 3);

  // intersection of two planes in general position is a line
  Subspace p1(3, ps);
  p1.insert(vec(ps, {"1", "0", "q"}));
  p1.insert(vec(ps, {"0", "1", "0"}));
  Subspace p2(3, ps);
  p2.insert(vec(ps, {"1", "0", "0"}));
  p2.insert(vec(ps, {"0", "q", "1"}));
  Subspace line = p1.intersect(p2);
  CHECK(line.dimension() == 1);
  CHECK(p1.contains(line));
  CHECK(p2.contains(line));
}

TEST_CASE("kernel of equation rows") {
  auto ps = qset();
  Subspace k = kernel_of_rows({vec(ps, {"1", "1", "1"})}, 3, ps);
  CHECK(k.dimension() == 2);
  CHECK(k.contains(vec(ps, {"1", "-1", "0"})));
  CHECK(k.contains(vec(ps, {"0", "1", "-1"})));
  CHECK(!k.contains(vec(ps, {"1", "1", "1"})));

  // q-dependent relation: x0 + q*x1 = 0
  Subspace k2 = kernel_of_rows({vec(ps, {"1", "q"})}, 2, ps);
  CHECK(k2.dimension() == 1);
  CHECK(k2.contains(vec(ps, {"-q", "1"})));
}

TEST_CASE("operator algebra") {
  auto ps = qset();
  Scalar q = Scalar::param(ps, "q");

  LinOp m(2, 2, ps);
  m.set(0, 0, q);
  m.set(0, 1, Scalar::one(ps));
  m.set(1, 1, Scalar::one(ps));

  LinOp inv = m.inverse();
  CHECK(m.compose(inv) == LinOp::identity(2, ps));
  CHECK(inv.compose(m) == LinOp::identity(2, ps));
  CHECK(inv.get(0, 0) == q.inverse());
  CHECK(inv.get(0, 1) == -q.inverse());

  CHECK(m.trace() == q + Scalar::one(ps));
  CHECK((m - m).is_zero());
  CHECK(m.transpose().get(1, 0) == Scalar::one(ps));

  LinOp sing(2, 2, ps);
  sing.set(0, 0, Scalar::one(ps));
  sing.set(1, 0, Scalar::one(ps));
  CHECK_THROWS_WITH_AS(sing.inverse(), doctest::Contains("singular"), Error);
  CHECK(sing.image().dimension() == 1);
  CHECK(sing.kernel().dimension() == 1);
  CHECK(sing.kernel().contains(vec(ps, {"0", "1"})));
}

TEST_CASE("tensor lifts satisfy the braid pattern of the flip") {
  auto ps = qset();
  // flip on V (x) V, dim V = 2
  LinOp flip(4, 4, ps);
  for (uint32_t i = 0; i < 2; ++i)
    for (uint32_t j = 0; j < 2; ++j) flip.set(j * 2 + i, i * 2 + j, Scalar::one(ps));

  CHECK(flip.compose(flip) == LinOp::identity(4, ps));
  CHECK(flip.trace() == Scalar::integer(ps, 2));

  LinOp f12 = flip.lift12(2), f23 = flip.lift23(2);
  CHECK(f12.compose(f12) == LinOp::identity(8, ps));
  CHECK(f23.compose(f23) == LinOp::identity(8, ps));
  // (12)(23)(12) = (13) = (23)(12)(23)
  CHECK(f12.compose(f23).compose(f12) == f23.compose(f12).compose(f23));
  // basis check: e0 (x) e1 (x) e0 under f12 -> e1 (x) e0 (x) e0
  SparseVec e = {{static_cast<uint32_t>(0 * 4 + 1 * 2 + 0), Scalar::one(ps)}};
  SparseVec img = f12.apply(e);
  REQUIRE(img.size() == 1);
  CHECK(img[0].first == 4);

  // Kronecker product against the lift: flip12 = flip (x) id
  CHECK(flip.tensor(LinOp::identity(2, ps)) == f12);
  CHECK(LinOp::identity(2, ps).tensor(flip) == f23);
}
