#include "qpencil/quotient.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "qpencil/cpoly.hpp"

namespace qpencil {

namespace {

size_t pow_sz(size_t base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

size_t binom_sz(size_t n, size_t k) {
  if (k > n) return 0;
  size_t r = 1;
  for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Scalar at_point(const Scalar& c, const ParamPoint& at) {
  Scalar r = c;
  for (const auto& [name, val] : at) r = r.substitute(name, val);
  return r;
}

NCPoly word_poly(const RelationFamily& f, const Word& w) {
  return NCPoly::word(f.gens, f.ps, w, Scalar::one(f.ps));
}

std::string word_text(const GenSetPtr& gens, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " * ";
    s += gens->name(w[i]);
  }
  return s;
}

// Ideal elements of exact degree d for a graded family: span of x * r * y
// over words with |x| + |y| = d - 2, in all_words(n, d) coordinates.
Subspace graded_ideal_degree(const RelationFamily& f, int d) {
  const size_t ng = f.gens->size();
  Subspace sp(static_cast<uint32_t>(pow_sz(ng, d)), f.ps);
  for (const NCPoly& r : f.relations) {
    if (r.is_zero()) continue;
    for (int a = 0; a + 2 <= d; ++a) {
      const int b = d - 2 - a;
      for (const Word& x : all_words(ng, a)) {
        const NCPoly xr = word_poly(f, x) * r;
        for (const Word& y : all_words(ng, b))
          sp.insert(nc_homogeneous_vec(xr * word_poly(f, y), d));
      }
    }
  }
  return sp;
}

// Deterministic enumeration of the truncated-ideal generators x * r * y,
// shared by the plain and the witness-tagged eliminations.
struct IdealGen {
  size_t rel = 0;
  Word x, y;
};

std::vector<IdealGen> ideal_generators(const RelationFamily& f, int D) {
  const size_t ng = f.gens->size();
  std::vector<IdealGen> out;
  for (size_t ri = 0; ri < f.relations.size(); ++ri) {
    const NCPoly& r = f.relations[ri];
    if (r.is_zero()) continue;
    const int dr = std::max(1, r.max_degree());
    for (int a = 0; a + dr <= D; ++a)
      for (int b = 0; a + b + dr <= D; ++b)
        for (const Word& x : all_words(ng, a))
          for (const Word& y : all_words(ng, b)) out.push_back({ri, x, y});
  }
  return out;
}

NCPoly generator_poly(const RelationFamily& f, const IdealGen& g) {
  return word_poly(f, g.x) * f.relations[g.rel] * word_poly(f, g.y);
}

std::string generator_text(const RelationFamily& f, const IdealGen& g) {
  std::string s;
  if (!g.x.empty()) s += word_text(f.gens, g.x) + " * ";
  s += "rel[" + std::to_string(g.rel) + "]";
  if (!g.y.empty()) s += " * " + word_text(f.gens, g.y);
  return s;
}

// When a nonzero constant lies in the truncated ideal, recover the explicit
// combination of relation multiples equal to 1 via a tagged elimination:
// ambient columns first (so pivots prefer them), one tag column per
// generator appended.  The canonical row pivoted at the constant column
// then reads 1 = sum of tag coefficients times generators.
std::string collapse_witness_text(const RelationFamily& f, int D,
                                  const FilteredLayout& lay) {
  const std::vector<IdealGen> gens = ideal_generators(f, D);
  Subspace sp(lay.ncols + static_cast<uint32_t>(gens.size()), f.ps);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    SparseVec v = filtered_vec(generator_poly(f, gens[gi]), lay);
    v.emplace_back(lay.ncols + static_cast<uint32_t>(gi), Scalar::one(f.ps));
    sp.insert(sv_normalized(std::move(v)));
  }
  const uint32_t const_col = lay.level_start(0);
  for (const SparseVec& row : sp.canonical_rows()) {
    if (row.empty() || row.front().first != const_col) continue;
    const Scalar scale = row.front().second.inverse();
    std::string text = "1 = ";
    bool first = true;
    NCPoly check = NCPoly::zero(f.gens, f.ps);
    for (const auto& [idx, c] : row) {
      if (idx < lay.ncols) continue;
      const Scalar coeff = c * scale;
      if (!first) text += " + ";
      first = false;
      const IdealGen& g = gens[idx - lay.ncols];
      text += coeff.to_string() + " * " + generator_text(f, g);
      check = check + generator_poly(f, g) * NCPoly::from_scalar(f.gens, coeff);
    }
    require(check == NCPoly::from_scalar(f.gens, Scalar::one(f.ps)),
            "internal error: collapse witness does not reconstruct 1");
    return text;
  }
  throw Error("internal error: collapse detected but no witness row found");
}

// An ideal element that is genuinely of filtration level d (pivot inside
// the degree-d block), printed in normal form.
std::string filtered_level_element(const Subspace& sp,
                                   const FilteredLayout& lay,
                                   const GenSetPtr& gens,
                                   const ParamSetPtr& ps, int d) {
  const uint32_t lo = lay.offset[static_cast<size_t>(d)];
  const uint32_t hi = lo + static_cast<uint32_t>(pow_sz(lay.ngens, d));
  for (const SparseVec& row : sp.canonical_rows()) {
    if (row.empty()) continue;
    const uint32_t p = row.front().first;
    if (p >= lo && p < hi) return filtered_poly(row, lay, gens, ps).to_string();
  }
  return "";
}

// Commutative monomial enumeration (all exponent vectors of total degree d).
void gen_monos(size_t ng, int remaining, size_t pos, Mono& cur,
               std::vector<Mono>& out) {
  if (pos + 1 == ng) {
    cur[pos] = remaining;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    gen_monos(ng, remaining - v, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Mono> monos_of_degree(size_t ng, int d) {
  Mono cur(ng, 0);
  std::vector<Mono> out;
  gen_monos(ng, d, 0, cur, out);
  return out;
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (int32_t e : m) d += e;
  return d;
}

Scalar sv_dot(const SparseVec& a, const SparseVec& b, const ParamSetPtr& ps) {
  Scalar acc = Scalar::zero(ps);
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      acc = acc + a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------

uint32_t FilteredLayout::column(const Word& w) const {
  require(static_cast<int>(w.size()) <= max_degree,
          "word exceeds the truncation degree");
  return offset[w.size()] +
         static_cast<uint32_t>(word_rank(ngens, w));
}

Word FilteredLayout::word_at(uint32_t col) const {
  for (int e = 0; e <= max_degree; ++e) {
    const uint32_t start = offset[static_cast<size_t>(e)];
    const uint32_t count = static_cast<uint32_t>(pow_sz(ngens, e));
    if (col >= start && col < start + count)
      return all_words(ngens, e).at(col - start);
  }
  throw Error("column outside the filtered layout");
}

FilteredLayout filtered_layout(uint32_t ngens, int max_degree) {
  require(max_degree >= 0, "truncation degree must be nonnegative");
  FilteredLayout lay;
  lay.ngens = ngens;
  lay.max_degree = max_degree;
  lay.offset.assign(static_cast<size_t>(max_degree) + 1, 0);
  uint32_t off = 0;
  for (int e = max_degree; e >= 0; --e) {
    lay.offset[static_cast<size_t>(e)] = off;
    off += static_cast<uint32_t>(pow_sz(ngens, e));
  }
  lay.ncols = off;
  return lay;
}

SparseVec filtered_vec(const NCPoly& p, const FilteredLayout& lay) {
  SparseVec v;
  for (const auto& t : p.terms()) v.emplace_back(lay.column(t.w), t.c);
  return sv_normalized(std::move(v));
}

NCPoly filtered_poly(const SparseVec& v, const FilteredLayout& lay,
                     const GenSetPtr& gens, const ParamSetPtr& ps) {
  NCPoly p = NCPoly::zero(gens, ps);
  for (const auto& [idx, c] : v)
    p = p + NCPoly::word(gens, ps, lay.word_at(idx), c);
  return p;
}

Subspace ideal_truncation(const RelationFamily& f, int D) {
  require(D >= 2, "truncation degree must be at least 2");
  const FilteredLayout lay =
      filtered_layout(static_cast<uint32_t>(f.gens->size()), D);
  Subspace sp(lay.ncols, f.ps);
  for (const IdealGen& g : ideal_generators(f, D))
    sp.insert(filtered_vec(generator_poly(f, g), lay));
  return sp;
}

std::string param_point_label(const ParamPoint& at) {
  if (at.empty()) return "symbolic";
  std::string s;
  for (size_t i = 0; i < at.size(); ++i) {
    if (i) s += ",";
    s += at[i].first + "=" + rat_str(at[i].second);
  }
  return s;
}

RelationFamily specialized(const RelationFamily& f, const ParamPoint& at) {
  RelationFamily g = f;
  for (NCPoly& r : g.relations)
    r = r.map_coeffs([&](const Scalar& c) { return at_point(c, at); });
  return g;
}

HilbertResult hilbert(const RelationFamily& f, int D, const ParamPoint& at) {
  require(D >= 2, "truncation degree must be at least 2");
  f.validate();
  const RelationFamily g = at.empty() ? f : specialized(f, at);
  const size_t ng = f.gens->size();

  HilbertResult res;
  res.family = f.name;
  res.kind = f.kind;
  res.mode = param_point_label(at);
  res.max_degree = D;

  if (f.kind == FamilyKind::graded) {
    res.dims.push_back(1);
    res.dims.push_back(ng);
    for (int d = 2; d <= D; ++d)
      res.dims.push_back(pow_sz(ng, d) -
                         graded_ideal_degree(g, d).dimension());
    return res;
  }

  const FilteredLayout lay = filtered_layout(static_cast<uint32_t>(ng), D);
  const Subspace sp = ideal_truncation(g, D);
  size_t ambient = 0;
  std::vector<size_t> ideal_dims(static_cast<size_t>(D) + 1, 0);
  for (int d = 0; d <= D; ++d)
    ideal_dims[static_cast<size_t>(d)] =
        sp.rows_supported_from(lay.level_start(d));
  for (int d = 0; d <= D; ++d) {
    ambient += pow_sz(ng, d);
    res.dims.push_back(ambient - ideal_dims[static_cast<size_t>(d)]);
  }
  if (ideal_dims[0] > 0) {
    res.collapsed = true;
    res.collapse_witness = collapse_witness_text(g, D, lay);
  }
  return res;
}

std::vector<size_t> free_dims(uint32_t ngens, int D, FamilyKind kind) {
  std::vector<size_t> out;
  size_t cum = 0;
  for (int d = 0; d <= D; ++d) {
    const size_t v = pow_sz(ngens, d);
    cum += v;
    out.push_back(kind == FamilyKind::graded ? v : cum);
  }
  return out;
}

std::vector<size_t> sym_dims(uint32_t ngens, int D, FamilyKind kind) {
  std::vector<size_t> out;
  size_t cum = 0;
  for (int d = 0; d <= D; ++d) {
    const size_t v = binom_sz(ngens + static_cast<size_t>(d) - 1,
                              static_cast<size_t>(d));
    cum += v;
    out.push_back(kind == FamilyKind::graded ? v : cum);
  }
  return out;
}

std::vector<size_t> commutative_quotient_dims(const std::vector<CPoly>& rels,
                                              const GenSetPtr& gens,
                                              const ParamSetPtr& ps, int D,
                                              FamilyKind kind) {
  require(D >= 2, "truncation degree must be at least 2");
  const size_t ng = gens->size();
  std::vector<std::vector<Mono>> monos;
  std::vector<std::map<Mono, uint32_t>> rank(static_cast<size_t>(D) + 1);
  for (int d = 0; d <= D; ++d) {
    monos.push_back(monos_of_degree(ng, d));
    for (uint32_t i = 0; i < monos.back().size(); ++i)
      rank[static_cast<size_t>(d)][monos.back()[i]] = i;
  }

  if (kind == FamilyKind::graded) {
    for (const CPoly& r : rels)
      require(r.is_zero() || (r.total_degree() == 2 && r.terms().size() > 0 &&
                              mono_degree(r.terms().back().m) == 2),
              "graded commutative reference needs homogeneous quadratic "
              "relations");
    std::vector<size_t> out = {1, ng};
    for (int d = 2; d <= D; ++d) {
      Subspace sp(static_cast<uint32_t>(monos[static_cast<size_t>(d)].size()),
                  ps);
      for (const CPoly& r : rels) {
        if (r.is_zero()) continue;
        for (const Mono& m : monos[static_cast<size_t>(d) - 2]) {
          const CPoly p = CPoly::monomial(gens, m, Scalar::one(ps)) * r;
          SparseVec v;
          for (const auto& t : p.terms())
            v.emplace_back(rank[static_cast<size_t>(d)].at(t.m), t.c);
          sp.insert(sv_normalized(std::move(v)));
        }
      }
      out.push_back(monos[static_cast<size_t>(d)].size() - sp.dimension());
    }
    return out;
  }

  // Filtered: one cumulative elimination, degree-descending blocks.
  std::vector<uint32_t> offc(static_cast<size_t>(D) + 1, 0);
  uint32_t off = 0;
  for (int e = D; e >= 0; --e) {
    offc[static_cast<size_t>(e)] = off;
    off += static_cast<uint32_t>(monos[static_cast<size_t>(e)].size());
  }
  Subspace sp(off, ps);
  auto cvec = [&](const CPoly& p) {
    SparseVec v;
    for (const auto& t : p.terms()) {
      const int d = mono_degree(t.m);
      v.emplace_back(offc[static_cast<size_t>(d)] +
                         rank[static_cast<size_t>(d)].at(t.m),
                     t.c);
    }
    return sv_normalized(std::move(v));
  };
  for (const CPoly& r : rels) {
    if (r.is_zero()) continue;
    const int dr = std::max(1, r.total_degree());
    for (int a = 0; a + dr <= D; ++a)
      for (const Mono& m : monos[static_cast<size_t>(a)])
        sp.insert(cvec(CPoly::monomial(gens, m, Scalar::one(ps)) * r));
  }
  std::vector<size_t> out;
  size_t ambient = 0;
  for (int d = 0; d <= D; ++d) {
    ambient += monos[static_cast<size_t>(d)].size();
    out.push_back(ambient - sp.rows_supported_from(offc[static_cast<size_t>(d)]));
  }
  return out;
}

std::vector<size_t> classical_reference_dims(const RelationFamily& f, int D) {
  ParamPoint at;
  if (f.ps->find("q") >= 0) at.emplace_back("q", Rat(1));
  if (f.ps->find("h") >= 0) at.emplace_back("h", Rat(0));
  const RelationFamily g = specialized(f, at);
  std::vector<CPoly> crels;
  for (const NCPoly& r : g.relations) {
    CPoly c = r.to_commutative();
    if (!c.is_zero()) crels.push_back(c);
  }
  return commutative_quotient_dims(crels, f.gens, f.ps, D, f.kind);
}

FlatnessVerdict flatness_verdict(const RelationFamily& f, int D,
                                 const std::vector<size_t>& reference,
                                 const ParamPoint& at) {
  FlatnessVerdict v;
  v.computed = hilbert(f, D, at);
  v.reference = reference;
  require(reference.size() == v.computed.dims.size(),
          "reference dimension table must cover degrees 0..D");

  if (v.computed.collapsed) {
    v.pass = false;
    v.first_deviation = 0;
    v.witness = "ideal contains a constant: " + v.computed.collapse_witness;
    return v;
  }

  const RelationFamily g = at.empty() ? f : specialized(f, at);
  for (int d = 0; d <= D; ++d) {
    const size_t got = v.computed.dims[static_cast<size_t>(d)];
    const size_t want = reference[static_cast<size_t>(d)];
    if (got == want) continue;
    v.pass = false;
    v.first_deviation = d;
    std::ostringstream os;
    os << "degree " << d << ": computed " << got << ", reference " << want;
    if (got < want) {
      std::string elem;
      if (f.kind == FamilyKind::graded) {
        const Subspace sp = graded_ideal_degree(g, d);
        if (!sp.canonical_rows().empty()) {
          const SparseVec& row = sp.canonical_rows().back();
          NCPoly p = NCPoly::zero(f.gens, f.ps);
          for (const auto& [idx, c] : row)
            p = p + NCPoly::word(f.gens, f.ps,
                                 all_words(f.gens->size(), d).at(idx), c);
          elem = p.to_string();
        }
      } else {
        const FilteredLayout lay =
            filtered_layout(static_cast<uint32_t>(f.gens->size()), D);
        elem = filtered_level_element(ideal_truncation(g, D), lay, f.gens,
                                      f.ps, d);
      }
      if (!elem.empty()) os << "; ideal element: " << elem;
    } else {
      os << "; quotient exceeds the reference (ideal too small at this "
            "degree)";
    }
    v.witness = os.str();
    return v;
  }
  v.pass = true;
  return v;
}

// ---------------------------------------------------------------------------

NuCheckReport pbw_nu_check(const NuData& d) {
  const uint32_t m = d.dim;
  const ParamSetPtr& ps = d.ps;
  require(m > 0, "quotient data needs a positive dimension");
  require(d.ideal.ncols() == m * m, "ideal must live in the tensor square");
  require(d.nu1.dim_in() == m * m && d.nu1.dim_out() == m,
          "nu1 must map the tensor square to the space");
  require(d.nu0.dim_in() == m * m && d.nu0.dim_out() == 1,
          "nu0 must map the tensor square to scalars");

  const LinOp id_v = LinOp::identity(m, ps);

  // K = (I (x) V) cap (V (x) I), built from a basis of I.
  Subspace ixv(m * m * m, ps), vxi(m * m * m, ps);
  for (const SparseVec& row : d.ideal.canonical_rows()) {
    for (uint32_t t = 0; t < m; ++t) {
      SparseVec a, b;
      for (const auto& [idx, c] : row) {
        a.emplace_back(idx * m + t, c);
        b.emplace_back(t * m * m + idx, c);
      }
      ixv.insert(sv_normalized(std::move(a)));
      vxi.insert(sv_normalized(std::move(b)));
    }
  }
  const Subspace k = ixv.intersect(vxi);

  NuCheckReport rep;
  rep.k_dim = k.dimension();

  const LinOp d1 = d.nu1.tensor(id_v) - id_v.tensor(d.nu1);
  const LinOp assoc =
      d.nu1.compose(d1) + d.nu0.tensor(id_v) - id_v.tensor(d.nu0);
  const LinOp scalar = d.nu0.compose(d1);

  // Functionals cutting out I, for a division-free membership test.
  std::vector<IPoly> raw1, raw2, raw3;
  const Subspace ann = kernel_of_rows(d.ideal.canonical_rows(), m * m, ps);
  auto collect = [](std::vector<IPoly>& raw, const SparseVec& v) {
    for (const auto& [idx, c] : v) {
      (void)idx;
      raw.push_back(c.num());
    }
  };
  for (const SparseVec& kv : k.canonical_rows()) {
    const SparseVec w = d1.apply(kv);
    for (const SparseVec& phi : ann.canonical_rows()) {
      const Scalar dot = sv_dot(w, phi, ps);
      if (!dot.is_zero()) raw1.push_back(dot.num());
    }
    collect(raw2, assoc.apply(kv));
    collect(raw3, scalar.apply(kv));
  }
  rep.inclusion_constraints = echelon_ipolys(raw1, ps);
  rep.assoc_constraints = echelon_ipolys(raw2, ps);
  rep.scalar_constraints = echelon_ipolys(raw3, ps);
  return rep;
}

}  // namespace qpencil
