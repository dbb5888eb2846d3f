#include "qpencil/lie.hpp"

#include <algorithm>
#include <map>

namespace qpencil {

LieData::LieData(GenSetPtr basis, ParamSetPtr ps,
                 std::vector<std::vector<std::vector<Scalar>>> c,
                 std::vector<std::pair<size_t, size_t>> root_pairs)
    : basis_(std::move(basis)),
      ps_(std::move(ps)),
      c_(std::move(c)),
      root_pairs_(std::move(root_pairs)) {
  const size_t n = basis_->size();
  require(c_.size() == n, "structure constants must be n x n x n");
  for (const auto& row : c_) {
    require(row.size() == n, "structure constants must be n x n x n");
    for (const auto& v : row)
      require(v.size() == n, "structure constants must be n x n x n");
  }
  for (const auto& [p, m] : root_pairs_)
    require(p < n && m < n, "root pair index out of range");
  // Antisymmetry.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        require(c_[i][j][k] == -c_[j][i][k],
                "structure constants are not antisymmetric");
  // Jacobi identity on basis triples.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        std::vector<Scalar> acc(n, Scalar::zero(ps_));
        auto add = [&](size_t a, size_t b, size_t cc) {
          // [[x_a, x_b], x_cc]
          for (size_t e = 0; e < n; ++e) {
            if (c_[a][b][e].is_zero()) continue;
            for (size_t f = 0; f < n; ++f)
              acc[f] += c_[a][b][e] * c_[e][cc][f];
          }
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (const auto& s : acc)
          require(s.is_zero(), "structure constants violate the Jacobi identity");
      }
}

const std::vector<Scalar>& LieData::bracket(size_t i, size_t j) const {
  require(i < dim() && j < dim(), "basis index out of range");
  return c_[i][j];
}

std::vector<Scalar> LieData::bracket_vec(const std::vector<Scalar>& x,
                                         const std::vector<Scalar>& y) const {
  const size_t n = dim();
  require(x.size() == n && y.size() == n, "vector length mismatch");
  std::vector<Scalar> out(n, Scalar::zero(ps_));
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (size_t k = 0; k < n; ++k)
        if (!c_[i][j][k].is_zero()) out[k] += xy * c_[i][j][k];
    }
  }
  return out;
}

LinOp LieData::ad(size_t i) const {
  require(i < dim(), "basis index out of range");
  const size_t n = dim();
  LinOp op(static_cast<uint32_t>(n), static_cast<uint32_t>(n), ps_);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      if (!c_[i][j][k].is_zero())
        op.set(static_cast<uint32_t>(k), static_cast<uint32_t>(j), c_[i][j][k]);
  return op;
}

SparseVec LieData::standard_r() const {
  require(!root_pairs_.empty(), "no root pairs recorded for this algebra");
  const uint32_t n = static_cast<uint32_t>(dim());
  const Scalar half = Scalar::rational(ps_, 1, 2);
  SparseVec r;
  for (const auto& [p, m] : root_pairs_) {
    r.emplace_back(static_cast<uint32_t>(p) * n + static_cast<uint32_t>(m),
                   half);
    r.emplace_back(static_cast<uint32_t>(m) * n + static_cast<uint32_t>(p),
                   -half);
  }
  return sv_normalized(std::move(r));
}

LieData sl2_lie(const ParamSetPtr& ps) {
  auto basis = make_gens({"H", "X", "Y"});
  const size_t n = 3;
  std::vector<std::vector<std::vector<Scalar>>> c(
      n, std::vector<std::vector<Scalar>>(n,
                                          std::vector<Scalar>(n, Scalar::zero(ps))));
  auto set = [&](size_t i, size_t j, size_t k, int v) {
    c[i][j][k] = Scalar::integer(ps, v);
    c[j][i][k] = Scalar::integer(ps, -v);
  };
  set(0, 1, 1, 2);   // [H,X] = 2X
  set(0, 2, 2, -2);  // [H,Y] = -2Y
  set(1, 2, 0, 1);   // [X,Y] = H
  return LieData(basis, ps, std::move(c), {{1, 2}});
}

namespace {

// 3x3 matrix with Scalar entries, flattened row-major.
using Mat3 = std::vector<Scalar>;

Mat3 zero3(const ParamSetPtr& ps) { return Mat3(9, Scalar::zero(ps)); }

Mat3 elem3(const ParamSetPtr& ps, int r, int c) {
  Mat3 m = zero3(ps);
  m[static_cast<size_t>(r) * 3 + c] = Scalar::one(ps);
  return m;
}

Mat3 commutator3(const ParamSetPtr& ps, const Mat3& a, const Mat3& b) {
  Mat3 m = zero3(ps);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Scalar s = Scalar::zero(ps);
      for (int k = 0; k < 3; ++k)
        s += a[r * 3 + k] * b[k * 3 + c] - b[r * 3 + k] * a[k * 3 + c];
      m[static_cast<size_t>(r) * 3 + c] = s;
    }
  return m;
}

Mat3 sub3(const Mat3& a, const Mat3& b) {
  Mat3 m = a;
  for (size_t i = 0; i < 9; ++i) m[i] = a[i] - b[i];
  return m;
}

}  // namespace

LieData sl3_lie(const ParamSetPtr& ps) {
  auto basis = make_gens({"H1", "H2", "E12", "E13", "E23", "F21", "F31", "F32"});
  std::vector<Mat3> b;
  b.push_back(sub3(elem3(ps, 0, 0), elem3(ps, 1, 1)));  // H1
  b.push_back(sub3(elem3(ps, 1, 1), elem3(ps, 2, 2)));  // H2
  b.push_back(elem3(ps, 0, 1));                         // E12
  b.push_back(elem3(ps, 0, 2));                         // E13
  b.push_back(elem3(ps, 1, 2));                         // E23
  b.push_back(elem3(ps, 1, 0));                         // F21
  b.push_back(elem3(ps, 2, 0));                         // F31
  b.push_back(elem3(ps, 2, 1));                         // F32
  const size_t n = b.size();

  // Express a traceless matrix over the basis: solve the 9-coordinate system
  // with one auxiliary column carrying the target.
  auto coords = [&](const Mat3& m) {
    std::vector<SparseVec> rows;
    for (uint32_t coord = 0; coord < 9; ++coord) {
      SparseVec row;
      for (uint32_t k = 0; k < n; ++k)
        if (!b[k][coord].is_zero()) row.emplace_back(k, b[k][coord]);
      if (!m[coord].is_zero())
        row.emplace_back(static_cast<uint32_t>(n), -m[coord]);
      if (!row.empty()) rows.push_back(sv_normalized(std::move(row)));
    }
    Subspace ker = kernel_of_rows(rows, static_cast<uint32_t>(n) + 1, ps);
    require(ker.dimension() == 1, "matrix is not in the span of the basis");
    const SparseVec& w = ker.canonical_rows()[0];
    const Scalar* t = sv_get(w, static_cast<uint32_t>(n));
    require(t != nullptr && !t->is_zero(),
            "matrix is not in the span of the basis");
    std::vector<Scalar> x(n, Scalar::zero(ps));
    for (const auto& e : w)
      if (e.first < n) x[e.first] = e.second / *t;
    return x;
  };

  std::vector<std::vector<std::vector<Scalar>>> c(
      n, std::vector<std::vector<Scalar>>(n,
                                          std::vector<Scalar>(n, Scalar::zero(ps))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto x = coords(commutator3(ps, b[i], b[j]));
      for (size_t k = 0; k < n; ++k) {
        c[i][j][k] = x[k];
        c[j][i][k] = -x[k];
      }
    }
  return LieData(basis, ps, std::move(c), {{2, 5}, {3, 6}, {4, 7}});
}

CybeReport cybe_defect(const LieData& L, const SparseVec& r) {
  const auto& ps = L.params();
  const uint32_t n = static_cast<uint32_t>(L.dim());
  std::map<uint32_t, Scalar> acc;
  auto add = [&](uint32_t a, uint32_t b, uint32_t c, const Scalar& v) {
    if (v.is_zero()) return;
    uint32_t idx = (a * n + b) * n + c;
    auto it = acc.find(idx);
    if (it == acc.end())
      acc.emplace(idx, v);
    else
      it->second += v;
  };
  for (const auto& [ab, v1] : r) {
    const uint32_t a = ab / n, bb = ab % n;
    for (const auto& [cd, v2] : r) {
      const uint32_t c = cd / n, d = cd % n;
      const Scalar v = v1 * v2;
      // [r12, r13]: [x_a, x_c] (x) x_b (x) x_d
      const auto& bac = L.bracket(a, c);
      for (uint32_t e = 0; e < n; ++e)
        add(e, bb, d, v * bac[e]);
      // [r12, r23]: x_a (x) [x_b, x_c] (x) x_d
      const auto& bbc = L.bracket(bb, c);
      for (uint32_t e = 0; e < n; ++e)
        add(a, e, d, v * bbc[e]);
      // [r13, r23]: x_a (x) x_c (x) [x_b, x_d]
      const auto& bbd = L.bracket(bb, d);
      for (uint32_t e = 0; e < n; ++e)
        add(a, c, e, v * bbd[e]);
    }
  }
  CybeReport rep;
  for (auto& [idx, v] : acc)
    if (!v.is_zero()) rep.defect.emplace_back(idx, std::move(v));
  rep.zero = rep.defect.empty();

  auto get = [&](uint32_t a, uint32_t b, uint32_t c) {
    const Scalar* p = sv_get(rep.defect, (a * n + b) * n + c);
    return p ? *p : Scalar::zero(ps);
  };
  rep.alternating = true;
  for (uint32_t a = 0; a < n && rep.alternating; ++a)
    for (uint32_t b = 0; b < n && rep.alternating; ++b)
      for (uint32_t c = 0; c < n && rep.alternating; ++c) {
        if (get(a, b, c) != -get(b, a, c)) rep.alternating = false;
        if (get(a, b, c) != -get(a, c, b)) rep.alternating = false;
      }

  rep.invariant = true;
  for (uint32_t k = 0; k < n && rep.invariant; ++k) {
    std::map<uint32_t, Scalar> im;
    auto addim = [&](uint32_t a, uint32_t b, uint32_t c, const Scalar& v) {
      if (v.is_zero()) return;
      uint32_t idx = (a * n + b) * n + c;
      auto it = im.find(idx);
      if (it == im.end())
        im.emplace(idx, v);
      else
        it->second += v;
    };
    for (const auto& [idx, v] : rep.defect) {
      const uint32_t a = idx / (n * n), b = (idx / n) % n, c = idx % n;
      const auto& ka = L.bracket(k, a);
      const auto& kb = L.bracket(k, b);
      const auto& kc = L.bracket(k, c);
      for (uint32_t e = 0; e < n; ++e) {
        addim(e, b, c, v * ka[e]);
        addim(a, e, c, v * kb[e]);
        addim(a, b, e, v * kc[e]);
      }
    }
    for (const auto& [idx, v] : im)
      if (!v.is_zero()) {
        rep.invariant = false;
        break;
      }
  }
  return rep;
}

namespace {

// Commutative monomials in 3 generators of total degree <= dmax, grlex-desc.
std::vector<Mono> monos_deg_le(int dmax) {
  std::vector<Mono> out;
  for (int d0 = 0; d0 <= dmax; ++d0)
    for (int d1 = 0; d1 + d0 <= dmax; ++d1)
      for (int d2 = 0; d2 + d1 + d0 <= dmax; ++d2)
        out.push_back({d0, d1, d2});
  std::sort(out.begin(), out.end(),
            [](const Mono& a, const Mono& b) { return mono_grlex_less(b, a); });
  return out;
}

SparseVec cpoly_to_vec(const CPoly& p, const std::vector<Mono>& monos) {
  SparseVec v;
  for (const auto& t : p.terms()) {
    bool found = false;
    for (uint32_t c = 0; c < monos.size(); ++c)
      if (monos[c] == t.m) {
        v.emplace_back(c, t.c);
        found = true;
        break;
      }
    require(found, "polynomial degree exceeds the enumerated window");
  }
  return sv_normalized(std::move(v));
}

}  // namespace

OrbitCheckReport rmatrix_bracket_orbit_check(const ParamSetPtr& ps) {
  BracketTable t = rmat_sl2(ps);
  const auto& gens = t.gens();
  auto g = [&](size_t i) { return CPoly::gen(gens, ps, i); };
  // Invariant quadric: H^2/2 + 2XY.
  CPoly C = (g(0) * g(0)).scaled(Scalar::rational(ps, 1, 2)) +
            (g(1) * g(2)).scaled(Scalar::integer(ps, 2));

  const std::vector<Mono> monos = monos_deg_le(3);
  auto ideal_slice = [&](const CPoly& q) {
    Subspace s(static_cast<uint32_t>(monos.size()), ps);
    s.insert(cpoly_to_vec(q, monos));
    for (size_t i = 0; i < 3; ++i) s.insert(cpoly_to_vec(q * g(i), monos));
    return s;
  };
  auto in_ideal = [&](const Subspace& s, const CPoly& p) {
    return p.is_zero() || s.contains(cpoly_to_vec(p, monos));
  };

  OrbitCheckReport rep;
  Subspace ic = ideal_slice(C);
  rep.jacobiator_in_ideal = true;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      for (size_t k = j + 1; k < 3; ++k)
        if (!in_ideal(ic, jacobiator(t, g(i), g(j), g(k))))
          rep.jacobiator_in_ideal = false;
  rep.quadric_central = true;
  for (size_t i = 0; i < 3; ++i)
    if (!in_ideal(ic, t.eval(C, g(i)))) rep.quadric_central = false;

  // Control: the non-invariant quadratic X^2 escapes its own ideal.
  CPoly P = g(1) * g(1);
  Subspace ip = ideal_slice(P);
  rep.control_escapes = false;
  for (size_t i = 0; i < 3; ++i) {
    CPoly br = t.eval(P, g(i));
    if (!in_ideal(ip, br)) {
      rep.control_escapes = true;
      rep.control_witness = "{" + P.to_string() + ", " + gens->name(i) +
                            "} = " + br.to_string();
      break;
    }
  }
  return rep;
}

}  // namespace qpencil
