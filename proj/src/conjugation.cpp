#include "qpencil/conjugation.hpp"

#include <array>

namespace qpencil {

namespace {

const char* kGenName[3] = {"u", "v", "w"};

// Bilinear extension of the bracket to arbitrary coordinate vectors.
SparseVec apply_bracket(const LinOp& bracket, const SparseVec& x,
                        const SparseVec& y) {
  SparseVec acc;
  for (const auto& [a, xa] : x)
    for (const auto& [b, yb] : y)
      acc = sv_add(acc, sv_scaled(bracket.col(a * 3 + b), xa * yb));
  return acc;
}

}  // namespace

SparseVec sv_conj(const SparseVec& v) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i, c.conj_imag());
  return out;
}

LinOp op_conj(const LinOp& op) {
  LinOp out(op.dim_in(), op.dim_out(), op.params());
  for (uint32_t j = 0; j < op.dim_in(); ++j) out.set_col(j, sv_conj(op.col(j)));
  return out;
}

ConjugationReport conjugation_check(const LinOp& bracket, const LinOp& t) {
  require(bracket.dim_in() == 9 && bracket.dim_out() == 3,
          "conjugation check: bracket must map a 9-dim space to a 3-dim one");
  require(t.dim_in() == 3 && t.dim_out() == 3,
          "conjugation check: candidate must be 3 x 3");
  const ParamSetPtr& ps = bracket.params();

  ConjugationReport rep;
  rep.real = (op_conj(t) == t);
  // (T conj)^2 = T conj(T) composed with the identity conjugation.
  rep.involutive = (t.compose(op_conj(t)) == LinOp::identity(3, ps));

  // Anti-multiplicativity on basis pairs: T conj(B) = -B (T (x) T).
  const LinOp lhs = t.compose(op_conj(bracket));
  const LinOp rhs =
      bracket.compose(t.tensor(t)).scaled(Scalar::integer(ps, -1));
  rep.compatible = true;
  for (uint32_t c = 0; c < 9 && rep.compatible; ++c) {
    if (!sv_equal(lhs.col(c), rhs.col(c))) {
      rep.compatible = false;
      rep.violation = std::string("(") + kGenName[c / 3] + ", " +
                      kGenName[c % 3] + ")";
    }
  }
  return rep;
}

std::vector<LinOp> classify_diagonal_conjugations(const LinOp& bracket) {
  const ParamSetPtr& ps = bracket.params();
  std::vector<LinOp> found;
  for (int mask = 0; mask < 8; ++mask) {
    LinOp t(3, 3, ps);
    for (int i = 0; i < 3; ++i) {
      const int sign = ((mask >> (2 - i)) & 1) ? 1 : -1;
      t.set(static_cast<uint32_t>(i), static_cast<uint32_t>(i),
            Scalar::integer(ps, sign));
    }
    if (conjugation_check(bracket, t).ok()) found.push_back(t);
  }
  return found;
}

ConjugationScan conjugation_scan_at(const QLieBracket& br, const Rat& q0) {
  const ParamSetPtr& ps = br.ps;
  const LinOp b0 =
      op_substituted(op_substituted(br.bracket, "q", q0), "M", Rat(1));

  const GenSetPtr tg = make_gens(
      {"t11", "t12", "t13", "t21", "t22", "t23", "t31", "t32", "t33"});
  auto T = [&](int r, int c) {
    return CPoly::gen(tg, ps, static_cast<size_t>(r * 3 + c));
  };
  const CPoly one = CPoly::from_scalar(tg, Scalar::one(ps));

  std::vector<CPoly> eqs;
  // Involution: T^2 = id, entrywise.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CPoly e = CPoly::zero(tg, ps);
      for (int k = 0; k < 3; ++k) e += T(i, k) * T(k, j);
      if (i == j) e -= one;
      if (!e.is_zero()) eqs.push_back(e);
    }
  // Compatibility: T B + B (T (x) T) = 0, entrywise over output row r and
  // input pair (a, b).
  for (int r = 0; r < 3; ++r)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        CPoly e = CPoly::zero(tg, ps);
        for (int l = 0; l < 3; ++l) {
          const Scalar beta = b0.get(static_cast<uint32_t>(l),
                                     static_cast<uint32_t>(a * 3 + b));
          if (!beta.is_zero()) e += T(r, l).scaled(beta);
        }
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2) {
            const Scalar beta = b0.get(static_cast<uint32_t>(r),
                                       static_cast<uint32_t>(a2 * 3 + b2));
            if (!beta.is_zero()) e += (T(a2, a) * T(b2, b)).scaled(beta);
          }
        if (!e.is_zero()) eqs.push_back(e);
      }

  // The two expected solutions must actually solve the system; anything
  // else means the bracket data is corrupt, not merely uncertified.
  const std::array<std::array<int, 9>, 2> points = {
      {{-1, 0, 0, 0, -1, 0, 0, 0, -1}, {1, 0, 0, 0, -1, 0, 0, 0, 1}}};
  for (const auto& pt : points)
    for (const CPoly& e : eqs) {
      CPoly val = e;
      for (size_t g = 0; g < 9; ++g)
        val = val.substitute_gen(
            g, CPoly::from_scalar(tg, Scalar::integer(ps, pt[g])));
      require(val.is_zero(),
              "conjugation scan: a known solution fails the system");
    }

  ConjugationScan scan;
  scan.q = q0;
  const std::vector<CPoly> gb = groebner_basis(eqs);
  scan.basis_size = gb.size();
  scan.collapsed = !gb.empty() && gb[0].is_scalar();

  // Certificate: these nine polynomials vanish exactly on the two points.
  const std::vector<CPoly> certificate = {
      T(0, 1),       T(0, 2),           T(1, 0),
      T(1, 2),       T(2, 0),           T(2, 1),
      T(1, 1) + one, T(2, 2) - T(0, 0), T(0, 0) * T(0, 0) - one};
  for (const CPoly& c : certificate) {
    const CPoly r = gb_reduce(c, gb);
    if (!r.is_zero()) scan.residuals.push_back(r.to_string());
  }
  scan.two_point_certified = !scan.collapsed && scan.residuals.empty();
  return scan;
}

OddSubalgebraReport odd_subalgebra_check(const LinOp& bracket, const LinOp& t,
                                         const ParamSetPtr& ps) {
  const ConjugationReport rep = conjugation_check(bracket, t);
  require(rep.ok(),
          "odd subalgebra: the conjugation must be real, involutive, and "
          "compatible with the bracket");
  require(ps->imag_index() >= 0,
          "odd subalgebra: parameter set lacks a formal imaginary unit");
  const Scalar im =
      Scalar::param(ps, ps->name(static_cast<size_t>(ps->imag_index())));
  const Scalar minus_one = Scalar::integer(ps, -1);

  const LinOp id3 = LinOp::identity(3, ps);
  const Subspace minus = (t + id3).kernel();  // T z = -z
  const Subspace plus = (t - id3).kernel();   // T z = +z
  require(minus.dimension() + plus.dimension() == 3,
          "odd subalgebra: eigenspaces of the involution must span");

  OddSubalgebraReport out;
  std::vector<SparseVec> even;
  for (const auto& r : minus.canonical_rows()) out.odd_basis.push_back(r);
  for (const auto& r : plus.canonical_rows())
    out.odd_basis.push_back(sv_scaled(r, im));
  for (const auto& r : plus.canonical_rows()) even.push_back(r);
  for (const auto& r : minus.canonical_rows())
    even.push_back(sv_scaled(r, im));

  const auto star = [&](const SparseVec& z) { return t.apply(sv_conj(z)); };
  const auto is_odd = [&](const SparseVec& z) {
    return sv_equal(star(z), sv_scaled(z, minus_one));
  };
  const auto is_even = [&](const SparseVec& z) {
    return sv_equal(star(z), z);
  };

  out.odd_closed = true;
  for (const auto& x : out.odd_basis)
    for (const auto& y : out.odd_basis)
      if (!is_odd(apply_bracket(bracket, x, y))) out.odd_closed = false;

  out.even_closed_under_i = true;
  for (const auto& x : even)
    for (const auto& y : even)
      if (!is_even(sv_scaled(apply_bracket(bracket, x, y), im)))
        out.even_closed_under_i = false;

  return out;
}

}  // namespace qpencil
