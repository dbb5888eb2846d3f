#include "qpencil/groebner.hpp"

#include <algorithm>
#include <utility>

#include "qpencil/common.hpp"

namespace qpencil {
namespace {

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_quot(const Mono& a, const Mono& b) {  // a / b
  Mono q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

const CPoly::Term& lt(const CPoly& p) { return p.terms().front(); }

CPoly make_monic(const CPoly& p) {
  return p.is_zero() ? p : p.scaled(lt(p).c.inverse());
}

CPoly spoly(const CPoly& f, const CPoly& g) {
  const Mono l = mono_lcm(lt(f).m, lt(g).m);
  const CPoly mf =
      CPoly::monomial(f.gens(), mono_quot(l, lt(f).m), lt(f).c.inverse());
  const CPoly mg =
      CPoly::monomial(g.gens(), mono_quot(l, lt(g).m), lt(g).c.inverse());
  return f * mf - g * mg;
}

}  // namespace

CPoly gb_reduce(const CPoly& p, const std::vector<CPoly>& basis) {
  CPoly rem = CPoly::zero(p.gens(), p.params());
  CPoly work = p;
  while (!work.is_zero()) {
    const CPoly::Term lead = lt(work);
    bool reduced = false;
    for (const CPoly& g : basis) {
      if (g.is_zero() || !mono_divides(lt(g).m, lead.m)) continue;
      const CPoly m = CPoly::monomial(p.gens(), mono_quot(lead.m, lt(g).m),
                                      lead.c / lt(g).c);
      work = work - g * m;
      reduced = true;
      break;
    }
    if (!reduced) {
      const CPoly m = CPoly::monomial(p.gens(), lead.m, lead.c);
      rem += m;
      work -= m;
    }
  }
  return rem;
}

std::vector<CPoly> groebner_basis(std::vector<CPoly> gens) {
  std::vector<CPoly> basis;
  for (CPoly& g : gens) {
    // Start from the normal form against what is already there: keeps the
    // basis small for redundant inputs.
    CPoly r = gb_reduce(g, basis);
    if (!r.is_zero()) basis.push_back(make_monic(r));
  }
  require(!basis.empty(), "groebner: empty generating set");

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  size_t processed = 0;
  while (!pairs.empty()) {
    require(++processed < 200000, "groebner: pair budget exceeded");
    // Normal selection: the pair with the grlex-smallest leading-term lcm.
    size_t best = 0;
    Mono best_lcm =
        mono_lcm(lt(basis[pairs[0].first]).m, lt(basis[pairs[0].second]).m);
    for (size_t k = 1; k < pairs.size(); ++k) {
      Mono l =
          mono_lcm(lt(basis[pairs[k].first]).m, lt(basis[pairs[k].second]).m);
      if (mono_grlex_less(l, best_lcm)) {
        best = k;
        best_lcm = std::move(l);
      }
    }
    std::swap(pairs[best], pairs.back());
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    // Disjoint leading monomials reduce to zero automatically.
    if (mono_coprime(lt(basis[i]).m, lt(basis[j]).m)) continue;
    const CPoly r = gb_reduce(spoly(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    for (size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.emplace_back(k, basis.size() - 1);
  }

  // Interreduce: drop elements whose leading monomial another one divides,
  // then put every survivor in normal form against the rest.
  std::vector<CPoly> reduced;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j)
      if (j != i && !basis[j].is_zero() &&
          mono_divides(lt(basis[j]).m, lt(basis[i]).m))
        redundant = (j < i || lt(basis[j]).m != lt(basis[i]).m);
    if (!redundant) reduced.push_back(basis[i]);
  }
  std::vector<CPoly> out;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<CPoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    CPoly r = gb_reduce(reduced[i], others);
    if (!r.is_zero()) out.push_back(make_monic(r));
  }
  std::sort(out.begin(), out.end(), [](const CPoly& a, const CPoly& b) {
    return mono_grlex_less(lt(a).m, lt(b).m);
  });
  return out;
}

bool gb_contains(const std::vector<CPoly>& basis, const CPoly& p) {
  return gb_reduce(p, basis).is_zero();
}

}  // namespace qpencil
