#include "qpencil/braided.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "qpencil/common.hpp"

namespace qpencil {
namespace {

// Verify the defining relations on a set of generator actions.
void verify_ops(const ModuleOps& o, const ParamSetPtr& ps,
                const std::string& where) {
  const Scalar q = Scalar::param(ps, "q");
  const LinOp id = LinOp::identity(o.dim(), ps);
  require(o.kk.compose(o.kinv) == id, where + ": K K^-1 != 1");
  require(o.kk.compose(o.e).compose(o.kinv) == o.e.scaled(q.pow(2)),
          where + ": K E K^-1 != q^2 E");
  require(o.kk.compose(o.f).compose(o.kinv) == o.f.scaled(q.pow(-2)),
          where + ": K F K^-1 != q^-2 F");
  require((o.e.compose(o.f) - o.f.compose(o.e)).scaled(q - q.pow(-1)) ==
              o.kk - o.kinv,
          where + ": [E,F] != (K - K^-1)/(q - q^-1)");
}

// Linear combination of operator images of a 3-coordinate vector.
LinOp combine_images(const std::vector<LinOp>& images, const SparseVec& v,
                     uint32_t n, const ParamSetPtr& ps) {
  LinOp acc(n, n, ps);
  for (const auto& [i, val] : v) acc = acc + images.at(i).scaled(val);
  return acc;
}

// Sum of two-letter products of operator images over a tensor-square vector.
LinOp product_images(const std::vector<LinOp>& images, const SparseVec& v,
                     uint32_t n, const ParamSetPtr& ps) {
  LinOp acc(n, n, ps);
  for (const auto& [idx, val] : v)
    acc = acc + images.at(idx / 3).compose(images.at(idx % 3)).scaled(val);
  return acc;
}

Scalar sv_dot(const SparseVec& a, const SparseVec& b, const ParamSetPtr& ps) {
  Scalar acc = Scalar::zero(ps);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc = acc + ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

}  // namespace

Scalar q_int(int m, const ParamSetPtr& ps) {
  if (m < 0) return -q_int(-m, ps);
  const Scalar q = Scalar::param(ps, "q");
  Scalar s = Scalar::zero(ps);
  for (int j = 0; j < m; ++j) s = s + q.pow(m - 1 - 2 * j);
  return s;
}

WeightRep irrep(int k, const ParamSetPtr& ps) {
  require(k >= 0, "irrep: highest weight must be nonnegative");
  WeightRep r;
  r.ps = ps;
  r.k = k;
  r.dim = static_cast<uint32_t>(k + 1);
  const Scalar q = Scalar::param(ps, "q");
  LinOp e(r.dim, r.dim, ps), f(r.dim, r.dim, ps);
  LinOp kk(r.dim, r.dim, ps), kinv(r.dim, r.dim, ps);
  for (int i = 0; i <= k; ++i) {
    const auto col = static_cast<uint32_t>(i);
    kk.set(col, col, q.pow(k - 2 * i));
    kinv.set(col, col, q.pow(2 * i - k));
    if (i >= 1) e.set(col - 1, col, q_int(i, ps));
    if (i < k) f.set(col + 1, col, q_int(k - i, ps));
  }
  r.e = e;
  r.f = f;
  r.kk = kk;
  r.kinv = kinv;
  verify_ops(rep_ops(r), ps, "irrep(" + std::to_string(k) + ")");
  return r;
}

ModuleOps rep_ops(const WeightRep& r) { return {r.e, r.f, r.kk, r.kinv}; }

ModuleOps tensor_ops(const ModuleOps& a, const ModuleOps& b) {
  const ParamSetPtr& ps = a.e.params();
  const LinOp ia = LinOp::identity(a.dim(), ps);
  const LinOp ib = LinOp::identity(b.dim(), ps);
  ModuleOps t;
  t.e = a.e.tensor(ib) + a.kk.tensor(b.e);
  t.f = a.f.tensor(b.kinv) + ia.tensor(b.f);
  t.kk = a.kk.tensor(b.kk);
  t.kinv = a.kinv.tensor(b.kinv);
  return t;
}

ModuleOps end_ops(const WeightRep& r) {
  const ParamSetPtr& ps = r.ps;
  const LinOp id = LinOp::identity(r.dim, ps);
  ModuleOps t;
  // a . M = rho(a_1) M rho(antipode(a_2)) with antipode
  // K -> K^-1, E -> -K^-1 E, F -> -F K.
  t.kk = r.kk.tensor(r.kinv.transpose());
  t.kinv = r.kinv.tensor(r.kk.transpose());
  t.e = r.e.tensor(id) - r.kk.tensor(r.kinv.compose(r.e).transpose());
  t.f = r.f.tensor(r.kk.transpose()) - id.tensor(r.f.compose(r.kk).transpose());
  verify_ops(t, ps, "end_ops(" + std::to_string(r.k) + ")");
  return t;
}

ModuleOps transported_ops(const ModuleOps& ops, const LinOp& t) {
  const LinOp tinv = t.inverse();
  ModuleOps out;
  out.e = tinv.compose(ops.e).compose(t);
  out.f = tinv.compose(ops.f).compose(t);
  out.kk = tinv.compose(ops.kk).compose(t);
  out.kinv = tinv.compose(ops.kinv).compose(t);
  return out;
}

std::vector<WeightComponent> decompose(const ModuleOps& ops, int max_weight,
                                       const ParamSetPtr& ps) {
  const uint32_t n = ops.dim();
  const Scalar q = Scalar::param(ps, "q");
  const LinOp id = LinOp::identity(n, ps);
  const Subspace ker_e = ops.e.kernel();
  std::vector<WeightComponent> out;
  size_t total = 0;
  for (int w = max_weight; w >= 0; --w) {
    const Subspace ker_k = (ops.kk - id.scaled(q.pow(w))).kernel();
    Subspace hw = ker_e.intersect(ker_k);
    if (hw.dimension() == 0) continue;
    WeightComponent c;
    c.weight = w;
    c.multiplicity = hw.dimension();
    c.highest = std::move(hw);
    total += c.multiplicity * static_cast<size_t>(w + 1);
    out.push_back(std::move(c));
  }
  require(total == n, "decompose: isotypic dimensions do not fill the space");
  return out;
}

std::vector<std::pair<int, size_t>> decompose_end(const WeightRep& r) {
  const auto comps = decompose(end_ops(r), 2 * r.k, r.ps);
  std::vector<std::pair<int, size_t>> out;
  for (const auto& c : comps) out.emplace_back(c.weight, c.multiplicity);
  return out;
}

QLieBracket q_lie_bracket(const ParamSetPtr& ps) {
  const Scalar q = Scalar::param(ps, "q");
  const Scalar one = Scalar::one(ps);
  const Scalar m = Scalar::param(ps, "M");
  const WeightRep V = irrep(2, ps);
  const ModuleOps vops = rep_ops(V);
  const ModuleOps tt = tensor_ops(vops, vops);

  // Skew-type component: generated by the weight-2 vector
  // e0 (x) e1 - q^2 e1 (x) e0 under the lowering action.
  SparseVec f0 = sv_normalized({{0 * 3 + 1, one}, {1 * 3 + 0, -q.pow(2)}});
  require(tt.e.apply(f0).empty(),
          "bracket: skew highest vector is not annihilated by raising");
  require(sv_equal(tt.kk.apply(f0), sv_scaled(f0, q.pow(2))),
          "bracket: skew highest vector has the wrong weight");
  const SparseVec f1 = tt.f.apply(f0);
  const SparseVec f2 = tt.f.apply(f1);
  require(!f2.empty() && tt.f.apply(f2).empty(),
          "bracket: skew component is not 3-dimensional");

  // Top component: orbit of e0 (x) e0.
  std::vector<SparseVec> top;
  top.push_back(SparseVec{{0, one}});
  for (int i = 0; i < 4; ++i) top.push_back(tt.f.apply(top.back()));
  require(!top.back().empty() && tt.f.apply(top.back()).empty(),
          "bracket: top component is not 5-dimensional");

  // Invariant line: joint kernel of both ladder actions and K - 1.
  const LinOp id9 = LinOp::identity(9, ps);
  const Subspace inv =
      tt.e.kernel().intersect(tt.f.kernel()).intersect((tt.kk - id9).kernel());
  require(inv.dimension() == 1, "bracket: invariant line is not 1-dimensional");
  const SparseVec cq = inv.canonical_rows()[0];

  // Coordinates with respect to the component basis (skew, top, invariant).
  LinOp basis9(9, 9, ps);
  basis9.set_col(0, f0);
  basis9.set_col(1, f1);
  basis9.set_col(2, f2);
  for (uint32_t j = 0; j < 5; ++j) basis9.set_col(3 + j, top[j]);
  basis9.set_col(8, cq);
  const LinOp coords = basis9.inverse();

  // Equivariant isomorphism from the skew component onto the module:
  // the skew highest vector goes to e0, lowering images follow along.
  LinOp iso(3, 3, ps);
  const SparseVec img0{{0, one}};
  const SparseVec img1 = vops.f.apply(img0);
  const SparseVec img2 = vops.f.apply(img1);
  iso.set_col(0, img0);
  iso.set_col(1, img1);
  iso.set_col(2, img2);
  LinOp proj(9, 3, ps);
  for (uint32_t j = 0; j < 9; ++j) {
    SparseVec kept;
    for (const auto& [r, val] : coords.col(j))
      if (r < 3) kept.emplace_back(r, val);
    proj.set_col(j, sv_normalized(std::move(kept)));
  }
  const LinOp braw = iso.compose(proj);

  // Vanishing off the skew component, isomorphism on it.
  for (const auto& t : top)
    require(braw.apply(t).empty(), "bracket: does not vanish on the top component");
  require(braw.apply(cq).empty(), "bracket: does not vanish on the invariant line");
  {
    Subspace im(3, ps);
    im.insert(braw.apply(f0));
    im.insert(braw.apply(f1));
    im.insert(braw.apply(f2));
    require(im.dimension() == 3,
            "bracket: not an isomorphism on the skew component");
  }

  // Recorded change of basis: u = e2, v = e1, w = -(q^2+1)^-2 e0, and an
  // overall scale fixed by matching [v,u] = M u.
  const Scalar wscale = -((q.pow(2) + one).pow(2)).inverse();
  LinOp t_mod(3, 3, ps);
  t_mod.set(2, 0, one);
  t_mod.set(1, 1, one);
  t_mod.set(0, 2, wscale);
  const LinOp t_inv = t_mod.inverse();

  const LinOp b1 = t_inv.compose(braw).compose(t_mod.tensor(t_mod));
  const SparseVec vu = b1.col(1 * 3 + 0);
  require(vu.size() == 1 && vu[0].first == 0,
          "bracket: [v,u] is not a multiple of u");
  const Scalar kappa = m / vu[0].second;
  const LinOp b = b1.scaled(kappa);

  // The printed multiplication table, verified entry by entry.
  const Scalar qq = q.pow(2);
  const Scalar uw = (q + q.pow(-1)).inverse() * m;
  LinOp expect(9, 3, ps);
  expect.set(0, 0 * 3 + 1, -qq * m);        // [u,v] = -q^2 M u
  expect.set(1, 0 * 3 + 2, uw);             // [u,w] = (q+q^-1)^-1 M v
  expect.set(0, 1 * 3 + 0, m);              // [v,u] = M u
  expect.set(1, 1 * 3 + 1, (one - qq) * m); // [v,v] = (1-q^2) M v
  expect.set(2, 1 * 3 + 2, -qq * m);        // [v,w] = -q^2 M w
  expect.set(1, 2 * 3 + 0, -uw);            // [w,u] = -(q+q^-1)^-1 M v
  expect.set(2, 2 * 3 + 1, m);              // [w,v] = M w
  require(b == expect,
          "bracket: multiplication table mismatch after the recorded rescaling");

  QLieBracket out;
  out.ps = ps;
  out.gens = make_gens({"u", "v", "w"});
  out.bracket = b;
  out.to_module = t_mod;
  out.from_module = t_inv;
  out.ops = transported_ops(vops, t_mod);

  // Equivariance: the bracket intertwines the tensor-square action with the
  // module action for every generator.
  const ModuleOps tuvw = tensor_ops(out.ops, out.ops);
  require(b.compose(tuvw.e) == out.ops.e.compose(b),
          "bracket: does not intertwine the raising action");
  require(b.compose(tuvw.f) == out.ops.f.compose(b),
          "bracket: does not intertwine the lowering action");
  require(b.compose(tuvw.kk) == out.ops.kk.compose(b),
          "bracket: does not intertwine the group-like action");

  const LinOp tt_inv = t_inv.tensor(t_inv);
  out.v_minus = Subspace(9, ps);
  out.v_minus.insert(tt_inv.apply(f0));
  out.v_minus.insert(tt_inv.apply(f1));
  out.v_minus.insert(tt_inv.apply(f2));
  require(out.v_minus.dimension() == 3, "bracket: skew component lost rank");
  out.v_two_alpha = Subspace(9, ps);
  for (const auto& t : top) out.v_two_alpha.insert(tt_inv.apply(t));
  require(out.v_two_alpha.dimension() == 5, "bracket: top component lost rank");

  // Invariant vector, normalized so the u (x) w coefficient is 1; the q = 1
  // specialization must be the classical symmetric invariant
  // u (x) w + w (x) u + (1/2) v (x) v.
  SparseVec cuvw = tt_inv.apply(cq);
  const Scalar* cw = sv_get(cuvw, 0 * 3 + 2);
  require(cw != nullptr && !cw->is_zero(),
          "bracket: invariant vector has no u (x) w part");
  cuvw = sv_scaled(cuvw, cw->inverse());
  const SparseVec climit = sv_substituted(cuvw, "q", Rat(1));
  const SparseVec cclassical = sv_normalized(
      {{0 * 3 + 2, one}, {2 * 3 + 0, one}, {1 * 3 + 1, Scalar::rational(ps, 1, 2)}});
  require(sv_equal(climit, cclassical),
          "bracket: invariant vector has the wrong classical limit");
  out.casimir = cuvw;

  std::ostringstream rs;
  rs << "u = e2, v = e1, w = " << wscale.to_string()
     << " * e0; bracket scale " << kappa.to_string();
  out.rescaling = rs.str();
  return out;
}

AlmostRep almost_representation(const QLieBracket& br, const WeightRep& r) {
  const ParamSetPtr& ps = br.ps;
  const Scalar q = Scalar::param(ps, "q");
  AlmostRep out;
  out.rep = r;
  const uint32_t n = r.dim;
  if (r.k == 0) {
    // Only the zero morphism exists: End of the 1-dim module has no
    // component matching the 3-dim module.
    out.degenerate = true;
    out.images = {LinOp(1, 1, ps), LinOp(1, 1, ps), LinOp(1, 1, ps)};
    out.nu = Scalar::zero(ps);
    return out;
  }

  const ModuleOps eo = end_ops(r);
  const LinOp idn2 = LinOp::identity(n * n, ps);
  const Subspace hw2 =
      eo.e.kernel().intersect((eo.kk - idn2.scaled(q.pow(2))).kernel());
  require(hw2.dimension() == 1,
          "almost representation: weight-2 multiplicity is " +
              std::to_string(hw2.dimension()) + ", not 1");

  // Unfold a flattened endomorphism (row-major) into an operator.
  auto as_matrix = [&](const SparseVec& vec) {
    LinOp mop(n, n, ps);
    for (const auto& [idx, val] : vec) mop.set(idx / n, idx % n, val);
    return mop;
  };

  // The embedding sends the weight vectors e0, e1, e2 of the 3-dim module to
  // the highest vector and its lowering images (e1 = F e0 / [2], e2 = F e1).
  const SparseVec w0 = hw2.canonical_rows()[0];
  const SparseVec w1 = sv_scaled(eo.f.apply(w0), q_int(2, ps).inverse());
  const SparseVec w2 = eo.f.apply(w1);
  require(!w2.empty() && eo.f.apply(w2).empty(),
          "almost representation: embedding does not close under lowering");
  const std::vector<SparseVec> wims = {w0, w1, w2};

  // Full equivariance of the embedding.
  const WeightRep v3 = irrep(2, ps);
  const ModuleOps vops = rep_ops(v3);
  const LinOp* gens3[] = {&vops.e, &vops.f, &vops.kk};
  const LinOp* gens_end[] = {&eo.e, &eo.f, &eo.kk};
  for (size_t g = 0; g < 3; ++g)
    for (uint32_t i = 0; i < 3; ++i) {
      const SparseVec lhs = gens_end[g]->apply(wims[i]);
      SparseVec rhs;
      for (const auto& [j, val] : gens3[g]->col(i))
        rhs = sv_add(rhs, sv_scaled(wims[j], val));
      require(sv_equal(lhs, rhs),
              "almost representation: embedding is not equivariant");
    }

  // Images of u, v, w through the recorded change of basis.
  std::vector<LinOp> rho_e = {as_matrix(w0), as_matrix(w1), as_matrix(w2)};
  std::vector<LinOp> images;
  for (uint32_t a = 0; a < 3; ++a) {
    LinOp im(n, n, ps);
    for (const auto& [i, val] : br.to_module.col(a))
      im = im + rho_e[i].scaled(val);
    images.push_back(im);
  }

  // Composition factor: on the skew component, products of images deviate
  // from the image of the bracket by one common scalar.  (The other
  // components of the skew-type span are absent in this rank, so there is
  // nothing further to annihilate.)
  Scalar nu = Scalar::zero(ps);
  bool have_nu = false;
  for (const auto& row : br.v_minus.canonical_rows()) {
    const LinOp lhs = product_images(images, row, n, ps);
    const LinOp rhs = combine_images(images, br.bracket.apply(row), n, ps);
    if (!have_nu) {
      for (uint32_t j = 0; j < n && !have_nu; ++j) {
        const SparseVec& c = rhs.col(j);
        if (!c.empty()) {
          nu = lhs.get(c[0].first, j) / c[0].second;
          have_nu = true;
        }
      }
    }
    require(have_nu,
            "almost representation: bracket image vanishes on the skew component");
    require(lhs == rhs.scaled(nu),
            "almost representation: products deviate from the bracket by more "
            "than one common factor");
  }
  require(!nu.is_zero(), "almost representation: composition factor vanishes");
  out.images = std::move(images);
  out.nu = nu;
  return out;
}

BraidedStructure braided_structure(const QLieBracket& br, const WeightRep& r) {
  AlmostRep a = almost_representation(br, r);
  const ParamSetPtr& ps = br.ps;
  const uint32_t n = r.dim;
  BraidedStructure out;
  if (a.degenerate) {
    out.rho = std::move(a);
    out.c0 = Scalar::zero(ps);
    return out;
  }
  const Scalar nin = a.nu.inverse();
  for (auto& im : a.images) im = im.scaled(nin);

  // The rescaled images satisfy the quadratic-linear relations of the
  // bracket's enveloping algebra at unit shift.
  for (const auto& row : br.v_minus.canonical_rows()) {
    const LinOp lhs = product_images(a.images, row, n, ps);
    const LinOp rhs = combine_images(a.images, br.bracket.apply(row), n, ps);
    require(lhs == rhs,
            "braided structure: enveloping relations are not annihilated");
  }

  // The invariant vector maps to a scalar.
  const LinOp cim = product_images(a.images, br.casimir, n, ps);
  const Scalar c0 = cim.get(0, 0);
  require(cim == LinOp::identity(n, ps).scaled(c0),
          "braided structure: Casimir image is not scalar");
  out.rho = std::move(a);
  out.c0 = c0;
  return out;
}

Scalar quantum_trace(const WeightRep& r, const LinOp& m) {
  return r.kinv.compose(m).trace();
}

Scalar quantum_dimension(const WeightRep& r) {
  return quantum_trace(r, LinOp::identity(r.dim, r.ps));
}

RelationFamily sl2_enveloping_family(const QLieBracket& br) {
  RelationFamily f;
  f.name = "sl2_enveloping";
  f.gens = br.gens;
  f.ps = br.ps;
  f.kind = FamilyKind::filtered;
  const Scalar h = Scalar::param(br.ps, "h");
  for (const auto& row : br.v_minus.canonical_rows()) {
    NCPoly rel = NCPoly::zero(f.gens, f.ps);
    for (const auto& [idx, val] : row)
      rel = rel + NCPoly::word(f.gens, f.ps, Word{idx / 3, idx % 3}, val);
    for (const auto& [i, val] : br.bracket.apply(row))
      rel = rel + NCPoly::word(f.gens, f.ps, Word{i}, -(h * val));
    f.relations.push_back(std::move(rel));
  }
  f.validate();
  return f;
}

RelationFamily sl2_casimir_family(const QLieBracket& br, const Scalar& c0) {
  RelationFamily f = sl2_enveloping_family(br);
  f.name = "sl2_casimir_level";
  NCPoly rel = NCPoly::zero(f.gens, f.ps);
  for (const auto& [idx, val] : br.casimir)
    rel = rel + NCPoly::word(f.gens, f.ps, Word{idx / 3, idx % 3}, val);
  rel = rel - NCPoly::from_scalar(f.gens, c0);
  f.relations.push_back(std::move(rel));
  f.validate();
  return f;
}

NuData sl2_nu_data(const QLieBracket& br) {
  const ParamSetPtr& ps = br.ps;
  NuData d;
  d.ps = ps;
  d.dim = 3;
  d.ideal = Subspace(9, ps);
  for (const auto& row : br.v_minus.canonical_rows()) d.ideal.insert(row);
  d.ideal.insert(br.casimir);
  require(d.ideal.dimension() == 4, "nu data: ideal is not 4-dimensional");
  d.nu1 = br.bracket.scaled(Scalar::param(ps, "h"));

  // The degree-0 map is the functional vanishing on the skew and top
  // components with value c0 on the invariant vector.
  std::vector<SparseVec> ann;
  for (const auto& row : br.v_minus.canonical_rows()) ann.push_back(row);
  for (const auto& row : br.v_two_alpha.canonical_rows()) ann.push_back(row);
  const Subspace phi = kernel_of_rows(ann, 9, ps);
  require(phi.dimension() == 1, "nu data: invariant functional is not unique");
  SparseVec p = phi.canonical_rows()[0];
  const Scalar val = sv_dot(p, br.casimir, ps);
  require(!val.is_zero(), "nu data: functional does not see the invariant vector");
  p = sv_scaled(p, Scalar::param(ps, "c0") / val);
  LinOp nu0(9, 1, ps);
  for (const auto& [j, coeff] : p) nu0.set(0, j, coeff);
  d.nu0 = nu0;
  return d;
}

}  // namespace qpencil
