#include "qpencil/hecke.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "qpencil/bracket.hpp"
#include "qpencil/common.hpp"

namespace qpencil {

LinOp hecke_s(int n, const ParamSetPtr& ps) {
  require(n >= 1, "hecke_s: dimension must be positive");
  const uint32_t un = static_cast<uint32_t>(n);
  const Scalar q = Scalar::param(ps, "q");
  LinOp s(un * un, un * un, ps);
  for (uint32_t i = 0; i < un; ++i) {
    for (uint32_t j = 0; j < un; ++j) {
      const uint32_t col = i * un + j;
      if (i == j) {
        s.set(col, col, q);
      } else {
        s.set(j * un + i, col, Scalar::one(ps));
        if (i < j) s.set(col, col, q - q.pow(-1));
      }
    }
  }
  return s;
}

LinOp flip_op(int m, const ParamSetPtr& ps) {
  require(m >= 1, "flip_op: dimension must be positive");
  const uint32_t um = static_cast<uint32_t>(m);
  LinOp f(um * um, um * um, ps);
  for (uint32_t i = 0; i < um; ++i)
    for (uint32_t j = 0; j < um; ++j)
      f.set(j * um + i, i * um + j, Scalar::one(ps));
  return f;
}

namespace {

uint32_t tensor_square_side(const LinOp& s) {
  require(s.dim_in() == s.dim_out() && s.dim_in() > 0,
          "operator must be square");
  uint32_t m = 1;
  while (m * m < s.dim_in()) ++m;
  require(m * m == s.dim_in(), "operator dimension is not a perfect square");
  return m;
}

}  // namespace

std::string qybe_violation(const LinOp& s) {
  const uint32_t m = tensor_square_side(s);
  const LinOp a = s.lift12(m), b = s.lift23(m);
  const LinOp lhs = a.compose(b).compose(a);
  const LinOp rhs = b.compose(a).compose(b);
  for (uint32_t col = 0; col < lhs.dim_in(); ++col) {
    if (sv_equal(lhs.col(col), rhs.col(col))) continue;
    for (uint32_t row = 0; row < lhs.dim_out(); ++row) {
      const Scalar l = lhs.get(row, col), r = rhs.get(row, col);
      if (!(l == r)) {
        return "braid identity fails at entry (" + std::to_string(row) + ", " +
               std::to_string(col) + "): " + l.to_string() +
               " != " + r.to_string();
      }
    }
  }
  return "";
}

bool check_qybe(const LinOp& s) { return qybe_violation(s).empty(); }

bool check_hecke(const LinOp& s, const Scalar& q) {
  const LinOp id = LinOp::identity(s.dim_in(), s.params());
  return (s - id.scaled(q)).compose(s + id.scaled(q.inverse())).is_zero();
}

LinOp s_w(const LinOp& s) {
  const uint32_t n = tensor_square_side(s);
  const uint32_t n2 = n * n;
  const LinOp sinv_t = s.inverse().transpose();
  LinOp w(n2 * n2, n2 * n2, s.params());
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t k = 0; k < n; ++k) {
      for (uint32_t j = 0; j < n; ++j) {
        for (uint32_t l = 0; l < n; ++l) {
          SparseVec acc;
          for (const auto& [mn, vs] : s.col(i * n + j)) {
            const uint32_t m = mn / n, nn = mn % n;
            for (const auto& [pq, vi] : sinv_t.col(k * n + l)) {
              const uint32_t p = pq / n, qq = pq % n;
              acc.emplace_back((m * n + p) * n2 + (nn * n + qq), vs * vi);
            }
          }
          w.set_col((i * n + k) * n2 + (j * n + l),
                    sv_normalized(std::move(acc)));
        }
      }
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Relation families

RelationFamily i_minus_family(int n, const ParamSetPtr& ps) {
  require(n >= 1, "i_minus: dimension must be positive");
  RelationFamily f;
  f.name = "i_minus(" + std::to_string(n) + ")";
  f.gens = matrix_gens(n);
  f.ps = ps;
  f.kind = FamilyKind::graded;
  const Scalar q = Scalar::param(ps, "q");
  const Scalar t = q - q.pow(-1);
  auto g = [&](int r, int c) {
    return NCPoly::gen(f.gens, ps, static_cast<size_t>(r) * n + c);
  };
  for (int r = 0; r < n; ++r)
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2)
        f.relations.push_back(g(r, c1) * g(r, c2) -
                              (g(r, c2) * g(r, c1)).scaled(q));
  for (int c = 0; c < n; ++c)
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2)
        f.relations.push_back(g(r1, c) * g(r2, c) -
                              (g(r2, c) * g(r1, c)).scaled(q));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
          f.relations.push_back(g(i, l) * g(k, j) - g(k, j) * g(i, l));
          f.relations.push_back(g(i, j) * g(k, l) - g(k, l) * g(i, j) -
                                (g(k, j) * g(i, l)).scaled(t));
        }
  f.validate();
  return f;
}

RelationFamily i_plus_family(int n, const ParamSetPtr& ps) {
  require(n >= 1, "i_plus: dimension must be positive");
  RelationFamily f;
  f.name = "i_plus(" + std::to_string(n) + ")";
  f.gens = matrix_gens(n);
  f.ps = ps;
  f.kind = FamilyKind::graded;
  const Scalar q = Scalar::param(ps, "q");
  const Scalar t = q - q.pow(-1);
  auto g = [&](int r, int c) {
    return NCPoly::gen(f.gens, ps, static_cast<size_t>(r) * n + c);
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) f.relations.push_back(g(r, c) * g(r, c));
  for (int r = 0; r < n; ++r)
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2)
        f.relations.push_back((g(r, c1) * g(r, c2)).scaled(q) +
                              g(r, c2) * g(r, c1));
  for (int c = 0; c < n; ++c)
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2)
        f.relations.push_back((g(r1, c) * g(r2, c)).scaled(q) +
                              g(r2, c) * g(r1, c));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
          f.relations.push_back(g(i, j) * g(k, l) + g(k, l) * g(i, j));
          f.relations.push_back(g(i, l) * g(k, j) + g(k, j) * g(i, l) +
                                (g(i, j) * g(k, l)).scaled(t));
        }
  f.validate();
  return f;
}

RelationFamily j_hq_family(int n, const ParamSetPtr& ps) {
  require(n >= 1, "j_hq: dimension must be positive");
  RelationFamily f;
  f.name = "j_hq(" + std::to_string(n) + ")";
  f.gens = matrix_gens(n);
  f.ps = ps;
  f.kind = FamilyKind::filtered;
  const Scalar q = Scalar::param(ps, "q");
  const Scalar h = Scalar::param(ps, "h");
  const Scalar t = q - q.pow(-1);
  const Scalar hm = h * (Scalar::one(ps) + q.pow(-1));
  auto g = [&](int r, int c) {
    return NCPoly::gen(f.gens, ps, static_cast<size_t>(r) * n + c);
  };
  for (int r = 0; r < n; ++r)
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2) {
        NCPoly rel = g(r, c1) * g(r, c2) - (g(r, c2) * g(r, c1)).scaled(q);
        if (r == c1) rel -= g(r, c2).scaled(h);
        if (r == c2) rel -= g(r, c1).scaled(h);
        f.relations.push_back(std::move(rel));
      }
  for (int c = 0; c < n; ++c)
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2) {
        NCPoly rel = g(r1, c) * g(r2, c) - (g(r2, c) * g(r1, c)).scaled(q);
        if (c == r1) rel -= g(r2, c).scaled(h);
        if (c == r2) rel -= g(r1, c).scaled(h);
        f.relations.push_back(std::move(rel));
      }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
          f.relations.push_back(g(i, l) * g(k, j) - g(k, j) * g(i, l));
          NCPoly rel = g(i, j) * g(k, l) - g(k, l) * g(i, j) -
                       (g(k, j) * g(i, l)).scaled(t);
          if (i == l) rel -= g(k, j).scaled(hm);
          if (k == j) rel -= g(i, l).scaled(hm);
          f.relations.push_back(std::move(rel));
        }
  f.validate();
  return f;
}

RelationFamily elliptic_quantum_family(const ParamSetPtr& ps) {
  require(ps->imag_index() >= 0,
          "elliptic quantum relations need a formal imaginary unit");
  RelationFamily f;
  f.name = "elliptic_quantum";
  f.gens = make_gens({"S0", "S1", "S2", "S3"});
  f.ps = ps;
  f.kind = FamilyKind::graded;
  const Scalar im =
      Scalar::param(ps, ps->name(static_cast<size_t>(ps->imag_index())));
  auto S = [&](int k) { return NCPoly::gen(f.gens, ps, static_cast<size_t>(k)); };
  auto anti = [&](int a, int b) { return S(a) * S(b) + S(b) * S(a); };
  auto J = [&](const char* nm) { return Scalar::param(ps, nm); };
  f.relations.push_back(S(1) * S(0) - S(0) * S(1) +
                        anti(2, 3).scaled(im * J("J23")));
  f.relations.push_back(S(2) * S(0) - S(0) * S(2) +
                        anti(3, 1).scaled(im * J("J31")));
  f.relations.push_back(S(3) * S(0) - S(0) * S(3) +
                        anti(1, 2).scaled(im * J("J12")));
  f.relations.push_back(S(1) * S(2) - S(2) * S(1) - anti(0, 3).scaled(im));
  f.relations.push_back(S(2) * S(3) - S(3) * S(2) - anti(0, 1).scaled(im));
  f.relations.push_back(S(3) * S(1) - S(1) * S(3) - anti(0, 2).scaled(im));
  f.validate();
  return f;
}

RelationFamily reflection_family(const LinOp& s, int n, const ParamSetPtr& ps) {
  const uint32_t un = static_cast<uint32_t>(n);
  const uint32_t N = un * un;
  require(n >= 1 && s.dim_in() == N && s.dim_out() == N,
          "reflection family: operator must act on the tensor square");
  RelationFamily f;
  f.name = "re(" + std::to_string(n) + ")";
  f.gens = matrix_gens(n, "u");
  f.ps = ps;
  f.kind = FamilyKind::graded;

  using Mat = std::vector<std::vector<NCPoly>>;
  auto zmat = [&]() {
    return Mat(N, std::vector<NCPoly>(N, NCPoly::zero(f.gens, ps)));
  };
  Mat smat = zmat(), u1 = zmat();
  for (uint32_t col = 0; col < N; ++col)
    for (const auto& [row, v] : s.col(col))
      smat[row][col] = NCPoly::from_scalar(f.gens, v);
  for (uint32_t i = 0; i < un; ++i)
    for (uint32_t j = 0; j < un; ++j)
      for (uint32_t k = 0; k < un; ++k)
        u1[i * un + k][j * un + k] =
            NCPoly::gen(f.gens, ps, static_cast<size_t>(i) * un + j);
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat c = zmat();
    for (uint32_t r = 0; r < N; ++r)
      for (uint32_t m = 0; m < N; ++m) {
        if (a[r][m].is_zero()) continue;
        for (uint32_t cc = 0; cc < N; ++cc)
          if (!b[m][cc].is_zero()) c[r][cc] += a[r][m] * b[m][cc];
      }
    return c;
  };
  const Mat lhs = mul(mul(mul(smat, u1), smat), u1);
  const Mat rhs = mul(mul(mul(u1, smat), u1), smat);
  Subspace seen(N * N, ps);
  for (uint32_t r = 0; r < N; ++r)
    for (uint32_t c = 0; c < N; ++c) {
      NCPoly rel = lhs[r][c] - rhs[r][c];
      if (rel.is_zero()) continue;
      if (seen.insert(nc_homogeneous_vec(rel, 2)))
        f.relations.push_back(std::move(rel));
    }
  require(!f.relations.empty(), "reflection family is empty");
  f.validate();
  return f;
}

RelationFamily relation_catalog(const std::string& name,
                                const ParamSetPtr& ps) {
  auto arg = [&](const std::string& head) -> std::optional<int> {
    if (name.size() < head.size() + 3 ||
        name.compare(0, head.size(), head) != 0 ||
        name[head.size()] != '(' || name.back() != ')')
      return std::nullopt;
    const std::string inner =
        name.substr(head.size() + 1, name.size() - head.size() - 2);
    require(!inner.empty() &&
                inner.find_first_not_of("0123456789") == std::string::npos,
            "bad size argument in relation family name: " + name);
    const int v = std::stoi(inner);
    require(v >= 1 && v <= 6, "relation family size out of range: " + name);
    return v;
  };
  if (auto n = arg("i_minus")) return i_minus_family(*n, ps);
  if (auto n = arg("i_plus")) return i_plus_family(*n, ps);
  if (auto n = arg("j_hq")) return j_hq_family(*n, ps);
  if (auto n = arg("re")) return reflection_family(hecke_s(*n, ps), *n, ps);
  if (name == "elliptic_quantum") return elliptic_quantum_family(ps);
  require(false, "unknown relation family: " + name);
  return {};
}

// ---------------------------------------------------------------------------
// Span comparisons

namespace {

Subspace family_span_deg2_at(const RelationFamily& f,
                             const std::optional<Rat>& qv) {
  if (!qv) return relation_span_deg2(f);
  RelationFamily g = f;
  for (auto& r : g.relations)
    r = r.map_coeffs([&](const Scalar& c) { return c.substitute("q", *qv); });
  return relation_span_deg2(g);
}

SpanReport iq_spans_impl(int n, const ParamSetPtr& ps,
                         const std::optional<Rat>& qv) {
  LinOp s = hecke_s(n, ps);
  if (qv) s = op_substituted(s, "q", *qv);
  const LinOp sw = s_w(s);
  const LinOp d = sw - LinOp::identity(sw.dim_in(), ps);
  SpanReport rep;
  rep.n = n;
  rep.mode = qv ? "q=" + rat_str(*qv) : "symbolic";
  rep.minus = d.image();
  rep.plus = d.kernel();
  rep.dim_minus = rep.minus.dimension();
  rep.dim_plus = rep.plus.dimension();
  rep.direct_sum = rep.dim_minus + rep.dim_plus == sw.dim_in() &&
                   rep.minus.intersect(rep.plus).dimension() == 0;
  rep.minus_matches =
      rep.minus.equals(family_span_deg2_at(i_minus_family(n, ps), qv));
  rep.plus_matches =
      rep.plus.equals(family_span_deg2_at(i_plus_family(n, ps), qv));
  return rep;
}

}  // namespace

SpanReport iq_spans(int n, const ParamSetPtr& ps) {
  return iq_spans_impl(n, ps, std::nullopt);
}

SpanReport iq_spans_at(int n, const ParamSetPtr& ps, const Rat& q_value) {
  return iq_spans_impl(n, ps, q_value);
}

bool elliptic_quantum_matches_classical(const ParamSetPtr& ps) {
  const RelationFamily qf = elliptic_quantum_family(ps);
  const Subspace qspan = relation_span_deg2(qf);
  const BracketTable t = elliptic_bracket(ps);
  check_same_gens(t.gens(), qf.gens);
  const Scalar im =
      Scalar::param(ps, ps->name(static_cast<size_t>(ps->imag_index())));
  const Scalar half = Scalar::rational(ps, 1, 2);
  const uint32_t ng = static_cast<uint32_t>(t.gens()->size());
  Subspace graph(ng * ng, ps);
  for (uint32_t a = 0; a < ng; ++a) {
    for (uint32_t b = a + 1; b < ng; ++b) {
      SparseVec v;
      v.emplace_back(a * ng + b, Scalar::one(ps));
      v.emplace_back(b * ng + a, -Scalar::one(ps));
      for (const auto& term : t.entry(a, b).terms()) {
        std::vector<uint32_t> idx;
        for (uint32_t g = 0; g < ng; ++g)
          for (int e = 0; e < term.m[g]; ++e) idx.push_back(g);
        require(idx.size() == 2, "bracket entry is not quadratic");
        const Scalar c = im * term.c;
        if (idx[0] == idx[1]) {
          v.emplace_back(idx[0] * ng + idx[0], c);
        } else {
          v.emplace_back(idx[0] * ng + idx[1], c * half);
          v.emplace_back(idx[1] * ng + idx[0], c * half);
        }
      }
      graph.insert(sv_normalized(std::move(v)));
    }
  }
  return qspan.equals(graph);
}

void export_operator_triplets(const LinOp& op, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), "cannot open " + path + " for writing");
  out << "# operator triplets\n";
  out << "dims: " << op.dim_out() << " " << op.dim_in() << "\n";
  for (uint32_t j = 0; j < op.dim_in(); ++j)
    for (const auto& [r, v] : op.col(j))
      out << r << " " << j << " " << v.to_string() << "\n";
  out.close();
  require(out.good(), "failed writing " + path);
}

}  // namespace qpencil
