#include "qpencil/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "qpencil/braided.hpp"
#include "qpencil/conjugation.hpp"
#include "qpencil/hecke.hpp"
#include "qpencil/lie.hpp"
#include "qpencil/parser.hpp"
#include "qpencil/quotient.hpp"

namespace qpencil {
namespace {

constexpr int kReportVersion = 1;

ParamSetPtr RP() {
  static ParamSetPtr ps =
      make_params({"q", "h", "M", "c0", "c1", "J12", "J23", "J31", "i"}, "i");
  return ps;
}

std::string dims_str(const std::vector<size_t>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i)
    s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Checks and their execution context.

struct CheckContext {
  const RunConfig* cfg = nullptr;
  std::vector<std::string> witnesses;

  void note(const std::string& w) { witnesses.push_back(w); }
  std::uint64_t seed_for(const std::string& name) const {
    return cfg->seed ^ stable_hash(name);
  }
  const Rat* pinned(const std::string& name) const {
    for (const auto& [k, v] : cfg->params)
      if (k == name) return &v;
    return nullptr;
  }
};

struct Check {
  std::string name;
  std::string mode;  // "symbolic" or "probabilistic"
  std::function<bool(CheckContext&)> fn;
};

// Deterministic genericity-aware sampling: small rationals, never 0 or +-1,
// rejections logged.  The per-check seed is cfg.seed XOR a stable hash of
// the check name, so adding checks never reshuffles other checks' points.
class PointSampler {
 public:
  PointSampler(std::uint64_t seed, std::vector<std::string>* log)
      : rng_(seed), log_(log) {}

  Rat draw() {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const std::int64_t num = static_cast<std::int64_t>(rng_() % 19) - 9;
      const std::int64_t den = static_cast<std::int64_t>(rng_() % 9) + 1;
      const Rat v(num, den);
      if (v == 0 || v == 1 || v == -1) {
        if (log_)
          log_->push_back("rejected sample " + rat_str(v) +
                          " (degenerate value)");
        continue;
      }
      return v;
    }
    throw Error("sampler: could not draw an admissible point");
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string>* log_;
};

// Evaluate fn at `count` distinct admissible values of parameter `pname`.
// A pinned specialization from the config replaces sampling.  Points whose
// specialization degenerates (an evaluation error, e.g. a vanishing
// denominator) are rejected, logged, and redrawn.
bool sampled_points(CheckContext& ctx, const std::string& check_name,
                    const std::string& pname, size_t count,
                    const std::function<bool(const Rat&)>& fn) {
  if (const Rat* pin = ctx.pinned(pname)) {
    ctx.note(pname + " = " + rat_str(*pin) + " (pinned by configuration)");
    const bool ok = fn(*pin);
    ctx.note("point " + pname + " = " + rat_str(*pin) +
             (ok ? ": ok" : ": FAILED"));
    return ok;
  }
  PointSampler sampler(ctx.seed_for(check_name), &ctx.witnesses);
  std::vector<Rat> used;
  bool all_ok = true;
  int rejections = 0;
  while (used.size() < count) {
    const Rat v = sampler.draw();
    if (std::find(used.begin(), used.end(), v) != used.end()) {
      ctx.note("rejected sample " + rat_str(v) + " (repeated point)");
      continue;
    }
    bool ok = false;
    try {
      ok = fn(v);
    } catch (const Error& e) {
      ctx.note("rejected sample " + rat_str(v) + " (" + e.what() + ")");
      require(++rejections < 64,
              "sampler: too many degenerate points for " + check_name);
      continue;
    }
    used.push_back(v);
    ctx.note("point " + pname + " = " + rat_str(v) +
             (ok ? ": ok" : ": FAILED"));
    all_ok = all_ok && ok;
  }
  return all_ok;
}

bool prob_mode(const RunConfig& cfg) { return cfg.mode == "probabilistic"; }

// ---------------------------------------------------------------------------
// poisson-pencil suite.

// (i, j) indices of a matrix-coordinate generator named "a_<i>^<j>".
std::pair<int, int> matrix_gen_indices(const std::string& name) {
  const size_t us = name.find('_'), caret = name.find('^');
  require(name.size() > 2 && name[0] == 'a' && us != std::string::npos &&
              caret != std::string::npos && us < caret,
          "not a matrix-coordinate generator: " + name);
  return {std::stoi(name.substr(us + 1, caret - us - 1)),
          std::stoi(name.substr(caret + 1))};
}

bool check_jacobi_table(CheckContext& ctx, const BracketTable& t) {
  const auto failures = jacobi_failures(t);
  ctx.note("generator triples checked: " +
           std::to_string(t.gens()->size() * (t.gens()->size() - 1) *
                          (t.gens()->size() - 2) / 6));
  for (const auto& f : failures)
    ctx.note("violated triple (" + t.gens()->name(f.i) + ", " +
             t.gens()->name(f.j) + ", " + t.gens()->name(f.k) +
             "): " + f.value.to_string());
  return failures.empty();
}

bool check_mixed_jacobi(CheckContext& ctx, const BracketTable& a,
                        const BracketTable& b) {
  const auto failures = mixed_jacobi_failures(a, b);
  for (const auto& f : failures)
    ctx.note("violated triple (" + a.gens()->name(f.i) + ", " +
             a.gens()->name(f.j) + ", " + a.gens()->name(f.k) +
             "): " + f.value.to_string());
  return failures.empty();
}

bool check_linearization(CheckContext& ctx, int n) {
  const ParamSetPtr ps = RP();
  const BracketTable quad = sklyanin2(n, ps);
  const GenSetPtr gens = quad.gens();
  std::vector<Scalar> delta;
  for (size_t g = 0; g < gens->size(); ++g) {
    const auto [i, j] = matrix_gen_indices(gens->name(g));
    delta.push_back(i == j ? Scalar::one(ps) : Scalar::zero(ps));
  }
  const ShiftResult sr = shift_and_linearize(quad, delta, "h");
  const BracketTable printed = linear1(n, ps);
  bool ok = true;
  for (size_t i = 0; i < gens->size(); ++i)
    for (size_t j = i + 1; j < gens->size(); ++j)
      if (sr.linear.entry(i, j) != printed.entry(i, j)) {
        ok = false;
        ctx.note("mismatch at {" + gens->name(i) + ", " + gens->name(j) +
                 "}: shifted gives " + sr.linear.entry(i, j).to_string() +
                 ", table says " + printed.entry(i, j).to_string());
      }
  if (ok) ctx.note("all table entries match coefficient-exactly");
  return ok;
}

bool check_no_diagonal_monomials(CheckContext& ctx, int n) {
  const BracketTable quad = sklyanin2(n, RP());
  const GenSetPtr gens = quad.gens();
  std::vector<bool> diagonal(gens->size(), false);
  for (size_t g = 0; g < gens->size(); ++g) {
    const auto [i, j] = matrix_gen_indices(gens->name(g));
    diagonal[g] = (i == j);
  }
  bool ok = true;
  for (size_t i = 0; i < gens->size(); ++i)
    for (size_t j = i + 1; j < gens->size(); ++j)
      for (const auto& term : quad.entry(i, j).terms()) {
        bool all_diag = true;
        int deg = 0;
        for (size_t g = 0; g < term.m.size(); ++g) {
          deg += term.m[g];
          if (term.m[g] > 0 && !diagonal[g]) all_diag = false;
        }
        if (deg == 2 && all_diag) {
          ok = false;
          ctx.note("diagonal-only quadratic monomial in {" + gens->name(i) +
                   ", " + gens->name(j) + "}");
        }
      }
  if (ok)
    ctx.note("no table entry contains a product of two diagonal coordinates");
  return ok;
}

bool check_elliptic_constraints(CheckContext& ctx) {
  const ParamSetPtr ps = RP();
  const auto cons = elliptic_constraints(ps);
  for (const auto& c : cons) ctx.note("constraint: " + c.to_string());
  if (cons.size() != 1 || cons[0].to_string() != "J12 + J23 + J31") {
    ctx.note("unexpected constraint set");
    return false;
  }
  // On the constraint surface the Jacobi identity holds ...
  const Scalar j12 = Scalar::param(ps, "J12"), j23 = Scalar::param(ps, "J23");
  const BracketTable onsurf =
      elliptic_bracket(ps).map_coeffs([&](const Scalar& c) {
        return c.substitute("J31", -j12 - j23);
      });
  if (!jacobi_failures(onsurf).empty()) {
    ctx.note("Jacobi fails on the constraint surface");
    return false;
  }
  // ... and off it, some triple fails.
  const BracketTable off = elliptic_bracket(ps).map_coeffs([](const Scalar& c) {
    Scalar s = c;
    for (const char* name : {"J12", "J23", "J31"})
      s = s.substitute(name, Rat(1));
    return s;
  });
  if (jacobi_failures(off).empty()) {
    ctx.note("generic parameters unexpectedly satisfy Jacobi");
    return false;
  }
  ctx.note("surface point passes, generic point fails, as required");
  return true;
}

bool check_elliptic_linearization(CheckContext& ctx) {
  // Shift only the distinguished coordinate; the h-linear part must be a
  // linear bracket satisfying Jacobi on the constraint surface.
  const ParamSetPtr ps = RP();
  const Scalar j12 = Scalar::param(ps, "J12"), j23 = Scalar::param(ps, "J23");
  const BracketTable onsurf =
      elliptic_bracket(ps).map_coeffs([&](const Scalar& c) {
        return c.substitute("J31", -j12 - j23);
      });
  std::vector<Scalar> shift(onsurf.gens()->size(), Scalar::zero(ps));
  shift[onsurf.gens()->index("S0")] = Scalar::one(ps);
  const ShiftResult sr = shift_and_linearize(onsurf, shift, "h");
  bool linear = true;
  for (size_t i = 0; i < onsurf.gens()->size(); ++i)
    for (size_t j = i + 1; j < onsurf.gens()->size(); ++j) {
      const CPoly& e = sr.linear.entry(i, j);
      if (!e.is_zero() && e.total_degree() > 1) linear = false;
    }
  if (!linear) {
    ctx.note("linearized table has a nonlinear entry");
    return false;
  }
  if (!jacobi_failures(sr.linear).empty()) {
    ctx.note("linearized table violates the Jacobi identity");
    return false;
  }
  if (!check_mixed_jacobi(ctx, sr.linear, onsurf)) {
    ctx.note("linearized table is not compatible with the quadratic one");
    return false;
  }
  ctx.note("linear part is a compatible linear bracket");
  return true;
}

void add_poisson_checks(std::vector<Check>& out, const RunConfig& cfg) {
  const ParamSetPtr ps = RP();
  std::vector<int> sizes{2};
  if (cfg.n >= 3) sizes.push_back(3);
  for (int n : sizes) {
    const std::string sfx = "-n" + std::to_string(n);
    out.push_back({"poisson-pencil/jacobi-quadratic" + sfx, "symbolic",
                   [n, ps](CheckContext& c) {
                     return check_jacobi_table(c, sklyanin2(n, ps));
                   }});
    out.push_back({"poisson-pencil/jacobi-linear" + sfx, "symbolic",
                   [n, ps](CheckContext& c) {
                     return check_jacobi_table(c, linear1(n, ps));
                   }});
    out.push_back({"poisson-pencil/jacobi-gl" + sfx, "symbolic",
                   [n, ps](CheckContext& c) {
                     return check_jacobi_table(c, gl_bracket(n, ps));
                   }});
    out.push_back({"poisson-pencil/compatibility" + sfx, "symbolic",
                   [n, ps](CheckContext& c) {
                     return check_mixed_jacobi(c, linear1(n, ps),
                                               sklyanin2(n, ps));
                   }});
    out.push_back({"poisson-pencil/linearization" + sfx, "symbolic",
                   [n](CheckContext& c) { return check_linearization(c, n); }});
    out.push_back({"poisson-pencil/no-diagonal-monomials" + sfx, "symbolic",
                   [n](CheckContext& c) {
                     return check_no_diagonal_monomials(c, n);
                   }});
    out.push_back({"poisson-pencil/r-twist" + sfx, "symbolic",
                   [n, ps](CheckContext& c) {
                     const bool ok = r_twisted_check(n, ps);
                     c.note(ok ? "sign-twisted linear identity holds on all "
                                 "generator pairs"
                               : "identity violated");
                     return ok;
                   }});
  }
  out.push_back({"poisson-pencil/elliptic-constraints", "symbolic",
                 [](CheckContext& c) { return check_elliptic_constraints(c); }});
  out.push_back({"poisson-pencil/elliptic-linearization", "symbolic",
                 [](CheckContext& c) {
                   return check_elliptic_linearization(c);
                 }});
}

// ---------------------------------------------------------------------------
// qybe suite.

void add_qybe_checks(std::vector<Check>& out, const RunConfig& cfg) {
  const ParamSetPtr ps = RP();
  const Scalar q = Scalar::param(ps, "q");
  std::vector<int> sizes{2};
  if (cfg.n >= 3) sizes.push_back(3);
  for (int n : sizes) {
    const std::string sfx = "-n" + std::to_string(n);
    out.push_back({"qybe/hecke-identity" + sfx, "symbolic",
                   [n, ps, q](CheckContext& c) {
                     const bool ok = check_hecke(hecke_s(n, ps), q);
                     c.note(ok ? "(S - q)(S + 1/q) = 0 symbolically"
                               : "quadratic identity fails");
                     return ok;
                   }});
    out.push_back({"qybe/braid-s" + sfx, "symbolic",
                   [n, ps](CheckContext& c) {
                     const std::string v = qybe_violation(hecke_s(n, ps));
                     if (!v.empty()) c.note(v);
                     return v.empty();
                   }});
  }
  out.push_back({"qybe/classical-limit-n2", "symbolic",
                 [ps](CheckContext& c) {
                   const bool ok = op_substituted(hecke_s(2, ps), "q",
                                                  Rat(1)) == flip_op(2, ps);
                   c.note(ok ? "specializes to the flip at q = 1"
                             : "q = 1 limit is not the flip");
                   return ok;
                 }});
  if (prob_mode(cfg)) {
    out.push_back(
        {"qybe/braid-sw-n2", "probabilistic", [ps](CheckContext& c) {
           return sampled_points(c, "qybe/braid-sw-n2", "q", 3,
                                 [&](const Rat& q0) {
                                   const LinOp s = op_substituted(
                                       hecke_s(2, ps), "q", q0);
                                   return check_qybe(s_w(s));
                                 });
         }});
  } else {
    out.push_back({"qybe/braid-sw-n2", "symbolic", [ps](CheckContext& c) {
                     const std::string v = qybe_violation(s_w(hecke_s(2, ps)));
                     if (!v.empty()) c.note(v);
                     return v.empty();
                   }});
  }
  out.push_back({"qybe/eigenvalue-one-n2", "symbolic",
                 [ps](CheckContext& c) {
                   const LinOp sw = s_w(hecke_s(2, ps));
                   const size_t dim =
                       (sw - LinOp::identity(16, ps)).kernel().dimension();
                   c.note("fixed subspace dimension: " + std::to_string(dim));
                   return dim > 0;
                 }});
  if (cfg.n >= 3) {
    // 81-dimensional doubled operator: sampled points, as sanctioned for
    // ambient dimension above 16 per factor.
    out.push_back(
        {"qybe/braid-sw-n3", "probabilistic", [ps](CheckContext& c) {
           return sampled_points(c, "qybe/braid-sw-n3", "q", 3,
                                 [&](const Rat& q0) {
                                   const LinOp s = op_substituted(
                                       hecke_s(3, ps), "q", q0);
                                   return check_qybe(s_w(s));
                                 });
         }});
  }
}

// ---------------------------------------------------------------------------
// spans suite.

bool span_report_ok(CheckContext& ctx, const SpanReport& r, size_t dm,
                    size_t dp) {
  ctx.note("mode " + r.mode + ": dims (" + std::to_string(r.dim_minus) + ", " +
           std::to_string(r.dim_plus) + ")");
  return r.dim_minus == dm && r.dim_plus == dp && r.direct_sum &&
         r.minus_matches && r.plus_matches;
}

void add_spans_checks(std::vector<Check>& out, const RunConfig& cfg) {
  const ParamSetPtr ps = RP();
  if (prob_mode(cfg)) {
    out.push_back(
        {"spans/iq-n2", "probabilistic", [ps](CheckContext& c) {
           return sampled_points(c, "spans/iq-n2", "q", 3,
                                 [&](const Rat& q0) {
                                   return span_report_ok(
                                       c, iq_spans_at(2, ps, q0), 6, 10);
                                 });
         }});
  } else {
    out.push_back({"spans/iq-n2", "symbolic", [ps](CheckContext& c) {
                     return span_report_ok(c, iq_spans(2, ps), 6, 10);
                   }});
  }
  out.push_back({"spans/iq-n2-classical", "symbolic",
                 [ps](CheckContext& c) {
                   return span_report_ok(c, iq_spans_at(2, ps, Rat(1)), 6, 10);
                 }});
  out.push_back(
      {"spans/jhq-symbols-match", "symbolic", [ps](CheckContext& c) {
         const Subspace a = relation_span_deg2(j_hq_family(2, ps));
         const Subspace b = relation_span_deg2(i_minus_family(2, ps));
         c.note("degree-2 symbol span dimension: " +
                std::to_string(a.dimension()));
         return a.equals(b);
       }});
  out.push_back({"spans/elliptic-quantum-classical-graph", "symbolic",
                 [ps](CheckContext& c) {
                   const bool ok = elliptic_quantum_matches_classical(ps);
                   c.note(ok ? "relation symbols span the classical bracket "
                               "graph"
                             : "span mismatch");
                   return ok;
                 }});
  if (cfg.n >= 3) {
    out.push_back(
        {"spans/iq-n3", "probabilistic", [ps](CheckContext& c) {
           return sampled_points(c, "spans/iq-n3", "q", 3,
                                 [&](const Rat& q0) {
                                   return span_report_ok(
                                       c, iq_spans_at(3, ps, q0), 36, 45);
                                 });
         }});
  }
}

// ---------------------------------------------------------------------------
// flatness suite.

bool note_verdict(CheckContext& ctx, const FlatnessVerdict& v) {
  ctx.note("computed dims: " + dims_str(v.computed.dims) +
           "; reference: " + dims_str(v.reference));
  if (!v.pass) ctx.note(v.witness);
  if (v.computed.collapsed)
    ctx.note("collapse witness: " + v.computed.collapse_witness);
  return v.pass;
}

void add_flatness_checks(std::vector<Check>& out, const RunConfig& cfg) {
  const ParamSetPtr ps = RP();
  const int D = cfg.degree;
  if (prob_mode(cfg)) {
    out.push_back(
        {"flatness/a0q-n2", "probabilistic", [ps, D](CheckContext& c) {
           const RelationFamily f = i_minus_family(2, ps);
           const auto ref = sym_dims(4, D, FamilyKind::graded);
           return sampled_points(c, "flatness/a0q-n2", "q", 3,
                                 [&](const Rat& q0) {
                                   return note_verdict(
                                       c, flatness_verdict(f, D, ref,
                                                           {{"q", q0}}));
                                 });
         }});
    out.push_back(
        {"flatness/ahq-n2", "probabilistic", [ps, D](CheckContext& c) {
           const RelationFamily f = j_hq_family(2, ps);
           const auto ref = sym_dims(4, D, FamilyKind::filtered);
           return sampled_points(
               c, "flatness/ahq-n2", "q", 3, [&](const Rat& q0) {
                 return note_verdict(
                     c, flatness_verdict(f, D, ref,
                                         {{"q", q0}, {"h", Rat(1)}}));
               });
         }});
  } else {
    out.push_back({"flatness/a0q-n2", "symbolic", [ps, D](CheckContext& c) {
                     return note_verdict(
                         c, flatness_verdict(i_minus_family(2, ps), D,
                                             sym_dims(4, D,
                                                      FamilyKind::graded)));
                   }});
    out.push_back({"flatness/ahq-n2", "symbolic", [ps, D](CheckContext& c) {
                     return note_verdict(
                         c, flatness_verdict(j_hq_family(2, ps), D,
                                             sym_dims(4, D,
                                                      FamilyKind::filtered)));
                   }});
  }
  out.push_back(
      {"flatness/jhq-h0-equals-iminus", "symbolic", [ps](CheckContext& c) {
         const RelationFamily at0 =
             specialized(j_hq_family(2, ps), {{"h", Rat(0)}});
         for (const NCPoly& r : at0.relations)
           if (!r.degree_part(0).is_zero() || !r.degree_part(1).is_zero()) {
             c.note("a lower-degree tail survives at h = 0");
             return false;
           }
         const bool ok = relation_span_deg2(at0).equals(
             relation_span_deg2(i_minus_family(2, ps)));
         c.note(ok ? "specialized relations span the graded family exactly"
                   : "span mismatch at h = 0");
         return ok;
       }});
  out.push_back(
      {"flatness/re-n2-evidence", "probabilistic", [ps, D](CheckContext& c) {
         c.note("evidence only: flatness of this family is conjectural");
         const RelationFamily f = relation_catalog("re(2)", ps);
         const auto ref = classical_reference_dims(f, D);
         return sampled_points(c, "flatness/re-n2-evidence", "q", 3,
                               [&](const Rat& q0) {
                                 return note_verdict(
                                     c, flatness_verdict(f, D, ref,
                                                         {{"q", q0}}));
                               });
       }});
  if (D >= 3) {
    out.push_back(
        {"flatness/perturbed-control", "symbolic", [ps, D](CheckContext& c) {
           // A twisted antidiagonal relation must be caught at degree 3.
           RelationFamily f = relation_catalog("i_minus(2)", ps);
           f.relations[4] =
               parse_ncpoly(f.gens, f.ps, "a_1^2*a_2^1 - q*a_2^1*a_1^2");
           const FlatnessVerdict v =
               flatness_verdict(f, D, sym_dims(4, D, FamilyKind::graded));
           c.note("computed dims: " + dims_str(v.computed.dims));
           if (v.pass || v.first_deviation != 3) {
             c.note("perturbation was not detected where expected");
             return false;
           }
           c.note("deviation detected at degree " +
                  std::to_string(v.first_deviation) + " as expected");
           return true;
         }});
  }
  if (cfg.n >= 3) {
    out.push_back(
        {"flatness/a0q-n3", "probabilistic", [ps, D](CheckContext& c) {
           const RelationFamily f = i_minus_family(3, ps);
           const auto ref = sym_dims(9, D, FamilyKind::graded);
           return sampled_points(c, "flatness/a0q-n3", "q", 3,
                                 [&](const Rat& q0) {
                                   return note_verdict(
                                       c, flatness_verdict(f, D, ref,
                                                           {{"q", q0}}));
                                 });
         }});
  }
  if (!cfg.relations_path.empty()) {
    const std::string path = cfg.relations_path;
    out.push_back(
        {"flatness/relations-file", "symbolic", [ps, D, path](CheckContext& c) {
           const RelationFamily f = load_relations(path, ps);
           f.validate();
           c.note("family " + f.name + " (" + family_kind_name(f.kind) + ", " +
                  std::to_string(f.relations.size()) + " relations) from " +
                  path);
           return note_verdict(
               c, flatness_verdict(f, D, classical_reference_dims(f, D)));
         }});
  }
}

// ---------------------------------------------------------------------------
// pbw-nu suite.

void add_pbw_checks(std::vector<Check>& out, const RunConfig& cfg) {
  const ParamSetPtr ps = RP();
  const int D = cfg.degree;
  out.push_back({"pbw-nu/zero-maps", "symbolic", [ps](CheckContext& c) {
                   const QLieBracket br = q_lie_bracket(ps);
                   NuData d;
                   d.ps = ps;
                   d.dim = 3;
                   d.ideal = br.v_minus;
                   d.nu1 = LinOp(9, 3, ps);
                   d.nu0 = LinOp(9, 1, ps);
                   const NuCheckReport r = pbw_nu_check(d);
                   c.note("overlap space dimension: " +
                          std::to_string(r.k_dim));
                   return r.holds_identically();
                 }});
  out.push_back(
      {"pbw-nu/classical-jacobi", "symbolic", [ps](CheckContext& c) {
         // Classical data: skew tensors, nu1 = h times the q = 1 bracket.
         const QLieBracket br = q_lie_bracket(ps);
         NuData d;
         d.ps = ps;
         d.dim = 3;
         d.ideal = Subspace(9, ps);
         for (uint32_t a = 0; a < 3; ++a)
           for (uint32_t b = a + 1; b < 3; ++b)
             d.ideal.insert({{a * 3 + b, Scalar::one(ps)},
                             {b * 3 + a, Scalar::integer(ps, -1)}});
         d.nu1 = op_substituted(br.bracket, "q", Rat(1))
                     .scaled(Scalar::param(ps, "h"));
         d.nu0 = LinOp(9, 1, ps);
         const NuCheckReport r = pbw_nu_check(d);
         c.note("overlap space dimension: " + std::to_string(r.k_dim));
         c.note(r.holds_identically()
                    ? "conditions reduce to the Jacobi identity and hold"
                    : "constraints are not identically satisfied");
         return r.holds_identically();
       }});
  out.push_back(
      {"pbw-nu/quantum-sl2", "symbolic", [ps](CheckContext& c) {
         const QLieBracket br = q_lie_bracket(ps);
         const NuData d = sl2_nu_data(br);
         const NuCheckReport r = pbw_nu_check(d);
         c.note("overlap space dimension: " + std::to_string(r.k_dim));
         for (const auto& p : r.inclusion_constraints)
           c.note("inclusion constraint: " + p.to_string());
         for (const auto& p : r.assoc_constraints)
           c.note("associativity constraint: " + p.to_string());
         for (const auto& p : r.scalar_constraints)
           c.note("scalar constraint: " + p.to_string());
         if (r.holds_identically())
           c.note("constraint sets empty: the conditions hold identically "
                  "in q, h, c0, M");
         return r.k_dim == 4 && r.holds_identically();
       }});
  const bool prob = prob_mode(cfg);
  out.push_back(
      {"pbw-nu/enveloping-flatness", prob ? "probabilistic" : "symbolic",
       [ps, D, prob](CheckContext& c) {
         const QLieBracket br = q_lie_bracket(ps);
         const RelationFamily f = sl2_enveloping_family(br);
         const auto ref = classical_reference_dims(f, D);
         if (!prob) return note_verdict(c, flatness_verdict(f, D, ref));
         return sampled_points(
             c, "pbw-nu/enveloping-flatness", "q", 3, [&](const Rat& q0) {
               return note_verdict(
                   c, flatness_verdict(
                          f, D, ref,
                          {{"q", q0}, {"h", Rat(1)}, {"M", Rat(1)}}));
             });
       }});
  out.push_back(
      {"pbw-nu/casimir-flatness", prob ? "probabilistic" : "symbolic",
       [ps, D, prob](CheckContext& c) {
         const QLieBracket br = q_lie_bracket(ps);
         const RelationFamily f =
             sl2_casimir_family(br, Scalar::param(ps, "c0"));
         const auto ref = classical_reference_dims(f, D);
         c.note("level eigenvalue kept symbolic");
         if (!prob) return note_verdict(c, flatness_verdict(f, D, ref));
         return sampled_points(
             c, "pbw-nu/casimir-flatness", "q", 3, [&](const Rat& q0) {
               return note_verdict(
                   c, flatness_verdict(f, D, ref,
                                       {{"q", q0},
                                        {"h", Rat(1)},
                                        {"M", Rat(1)},
                                        {"c0", Rat(5, 7)}}));
             });
       }});
}

// ---------------------------------------------------------------------------
// braided suite.

bool check_braided_table(CheckContext& ctx) {
  const ParamSetPtr ps = RP();
  const QLieBracket br = q_lie_bracket(ps);
  ctx.note("recorded rescaling: " + br.rescaling);
  // Two sample entries, stated explicitly in the report.
  const Scalar q = Scalar::param(ps, "q"), m = Scalar::param(ps, "M");
  const bool uv = br.bracket.get(0, 1) == -(q.pow(2) * m);
  const bool vu = br.bracket.get(0, 3) == m;
  ctx.note("[u,v] coefficient on u: " + br.bracket.get(0, 1).to_string());
  ctx.note("skew component dimension: " +
           std::to_string(br.v_minus.dimension()));
  return uv && vu && br.v_minus.dimension() == 3;
}

bool check_decompose_end(CheckContext& ctx, int k) {
  const auto comps = decompose_end(irrep(k, RP()));
  std::string shape;
  for (const auto& [w, m] : comps)
    shape += "(" + std::to_string(w) + ", " + std::to_string(m) + ") ";
  ctx.note("isotypic shape: " + shape);
  if (comps.size() != static_cast<size_t>(k) + 1) return false;
  for (int j = 0; j <= k; ++j)
    if (comps[static_cast<size_t>(j)] !=
        std::make_pair(2 * (k - j), static_cast<size_t>(1)))
      return false;
  return true;
}

bool check_almost_rep(CheckContext& ctx, int k) {
  const ParamSetPtr ps = RP();
  const QLieBracket br = q_lie_bracket(ps);
  const AlmostRep ar = almost_representation(br, irrep(k, ps));
  if (ar.degenerate) {
    ctx.note("degenerate (zero morphism only)");
    return k == 0;
  }
  ctx.note("composition factor: " + ar.nu.to_string());
  const Scalar at1 = ar.nu.substitute("q", Rat(1));
  ctx.note("classical limit of the factor: " + at1.to_string());
  return !ar.nu.is_zero() && !at1.is_zero();
}

bool check_casimir(CheckContext& ctx, int k) {
  const ParamSetPtr ps = RP();
  const QLieBracket br = q_lie_bracket(ps);
  const BraidedStructure bs = braided_structure(br, irrep(k, ps));
  ctx.note("casimir scalar: " + bs.c0.to_string());
  if (k == 0) return bs.c0.is_zero();
  // Classical limit of the eigenvalue (doubled-bracket normalization).
  const Scalar expected = Scalar::param(ps, "M", 2) *
                          Scalar::rational(ps, Rat(k * (k + 2), 2));
  const Scalar at1 = bs.c0.substitute("q", Rat(1));
  ctx.note("value at q = 1: " + at1.to_string());
  if (at1 != expected) {
    ctx.note("classical eigenvalue mismatch");
    return false;
  }
  // Normalization-free ratio law against the smallest module.
  const BraidedStructure base = braided_structure(br, irrep(1, ps));
  const Scalar ratio = bs.c0 / base.c0;
  if (ratio != Scalar::rational(ps, Rat(k * (k + 2), 3))) {
    ctx.note("eigenvalue ratio breaks the quadratic growth law");
    return false;
  }
  return true;
}

bool check_quantum_trace(CheckContext& ctx) {
  const ParamSetPtr ps = RP();
  const Scalar q = Scalar::param(ps, "q");
  if (quantum_dimension(irrep(1, ps)) != q + q.pow(-1)) {
    ctx.note("2-dim quantum dimension is not q + 1/q");
    return false;
  }
  ctx.note("quantum dimension of the 2-dim module: " +
           quantum_dimension(irrep(1, ps)).to_string());
  for (int k : {1, 2}) {
    const WeightRep r = irrep(k, ps);
    const ModuleOps eo = end_ops(r);
    const uint32_t n = r.dim;
    const auto as_matrix = [&](const SparseVec& vec) {
      LinOp mop(n, n, ps);
      for (const auto& [idx, val] : vec) mop.set(idx / n, idx % n, val);
      return mop;
    };
    for (uint32_t idx = 0; idx < n * n; ++idx) {
      const SparseVec basis{{idx, Scalar::one(ps)}};
      const bool ok =
          quantum_trace(r, as_matrix(eo.e.apply(basis))).is_zero() &&
          quantum_trace(r, as_matrix(eo.f.apply(basis))).is_zero() &&
          quantum_trace(r, as_matrix(eo.kk.apply(basis))) ==
              quantum_trace(r, as_matrix(basis));
      if (!ok) {
        ctx.note("invariance fails on a basis endomorphism");
        return false;
      }
    }
  }
  ctx.note("trace of the transported action matches the counit on all "
           "basis endomorphisms");
  return true;
}

void add_braided_checks(std::vector<Check>& out, const RunConfig&) {
  out.push_back({"braided/table", "symbolic",
                 [](CheckContext& c) { return check_braided_table(c); }});
  out.push_back({"braided/quantum-trace", "symbolic",
                 [](CheckContext& c) { return check_quantum_trace(c); }});
  for (int k = 1; k <= 5; ++k) {
    const std::string sfx = "-k" + std::to_string(k);
    out.push_back({"braided/decompose-end" + sfx, "symbolic",
                   [k](CheckContext& c) { return check_decompose_end(c, k); }});
    out.push_back({"braided/almost-rep" + sfx, "symbolic",
                   [k](CheckContext& c) { return check_almost_rep(c, k); }});
    out.push_back({"braided/casimir" + sfx, "symbolic",
                   [k](CheckContext& c) { return check_casimir(c, k); }});
  }
}

// ---------------------------------------------------------------------------
// conjugations suite.

LinOp sign_diag(const ParamSetPtr& ps, int a, int b, int c) {
  LinOp t(3, 3, ps);
  t.set(0, 0, Scalar::integer(ps, a));
  t.set(1, 1, Scalar::integer(ps, b));
  t.set(2, 2, Scalar::integer(ps, c));
  return t;
}

std::string diag_label(const LinOp& t) {
  std::string s = "diag(";
  for (uint32_t i = 0; i < 3; ++i)
    s += (i ? ", " : "") + t.get(i, i).to_string();
  return s + ")";
}

std::string vec_label(const SparseVec& v) {
  static const char* names[3] = {"u", "v", "w"};
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.is_one() ? std::string(names[i])
                    : c.to_string() + "*" + names[i];
  }
  return s.empty() ? "0" : s;
}

bool check_scan(CheckContext& ctx, const Rat& q0, bool expect_certified) {
  const ConjugationScan scan = conjugation_scan_at(q_lie_bracket(RP()), q0);
  ctx.note("elimination basis size: " + std::to_string(scan.basis_size));
  for (const auto& r : scan.residuals) ctx.note("residual: " + r);
  if (scan.collapsed) {
    ctx.note("system collapsed (no solutions at all)");
    return false;
  }
  if (expect_certified) return scan.two_point_certified;
  // The control point must be honestly uncertified, with evidence.
  ctx.note(scan.two_point_certified
               ? "unexpectedly certified at the control point"
               : "not two-point certified at this value, as expected");
  return !scan.two_point_certified && !scan.residuals.empty();
}

void add_conjugation_checks(std::vector<Check>& out, const RunConfig&) {
  const ParamSetPtr ps = RP();
  out.push_back({"conjugations/minus-identity", "symbolic",
                 [ps](CheckContext& c) {
                   const auto rep = conjugation_check(
                       q_lie_bracket(ps).bracket, sign_diag(ps, -1, -1, -1));
                   c.note("real, involutive, anti-multiplicative: required");
                   return rep.ok();
                 }});
  out.push_back({"conjugations/mixed-diagonal", "symbolic",
                 [ps](CheckContext& c) {
                   const auto rep = conjugation_check(
                       q_lie_bracket(ps).bracket, sign_diag(ps, 1, -1, 1));
                   c.note("diag(1, -1, 1) against the full bracket table");
                   return rep.ok();
                 }});
  out.push_back({"conjugations/identity-control", "symbolic",
                 [ps](CheckContext& c) {
                   const auto rep = conjugation_check(
                       q_lie_bracket(ps).bracket, LinOp::identity(3, ps));
                   c.note("violated pair: " + rep.violation);
                   return !rep.compatible && rep.violation == "(u, v)";
                 }});
  out.push_back(
      {"conjugations/rotation-classical-control", "symbolic",
       [ps](CheckContext& c) {
         const QLieBracket br = q_lie_bracket(ps);
         LinOp t1(3, 3, ps);
         t1.set(2, 0, Scalar::integer(ps, -1));
         t1.set(1, 1, Scalar::one(ps));
         t1.set(0, 2, Scalar::integer(ps, -1));
         const bool classical =
             conjugation_check(op_substituted(br.bracket, "q", Rat(1)), t1)
                 .ok();
         const auto sym = conjugation_check(br.bracket, t1);
         c.note(std::string("at q = 1: ") + (classical ? "compatible" : "no"));
         c.note("symbolically: " +
                (sym.compatible ? std::string("compatible")
                                : "violated pair " + sym.violation));
         return classical && !sym.compatible;
       }});
  out.push_back({"conjugations/diagonal-scan", "symbolic",
                 [ps](CheckContext& c) {
                   const auto found =
                       classify_diagonal_conjugations(q_lie_bracket(ps).bracket);
                   for (const auto& t : found)
                     c.note("compatible: " + diag_label(t));
                   return found.size() == 2 &&
                          found[0] == sign_diag(ps, -1, -1, -1) &&
                          found[1] == sign_diag(ps, 1, -1, 1);
                 }});
  for (const auto& [label, q0] :
       std::vector<std::pair<std::string, Rat>>{
           {"q2", Rat(2)}, {"q3", Rat(3)}, {"q5over2", Rat(5) / 2}}) {
    const Rat qv = q0;
    out.push_back({"conjugations/general-scan-" + label, "symbolic",
                   [qv](CheckContext& c) { return check_scan(c, qv, true); }});
  }
  out.push_back({"conjugations/general-scan-classical-control", "symbolic",
                 [](CheckContext& c) { return check_scan(c, Rat(1), false); }});
  out.push_back(
      {"conjugations/odd-closure-mixed", "symbolic", [ps](CheckContext& c) {
         const QLieBracket br = q_lie_bracket(ps);
         const auto rep =
             odd_subalgebra_check(br.bracket, sign_diag(ps, 1, -1, 1), ps);
         for (const auto& v : rep.odd_basis) c.note("odd: " + vec_label(v));
         return rep.odd_basis.size() == 3 && rep.odd_closed &&
                rep.even_closed_under_i;
       }});
  out.push_back(
      {"conjugations/odd-closure-negated-identity", "symbolic",
       [ps](CheckContext& c) {
         const QLieBracket br = q_lie_bracket(ps);
         const auto rep =
             odd_subalgebra_check(br.bracket, sign_diag(ps, -1, -1, -1), ps);
         for (const auto& v : rep.odd_basis) c.note("odd: " + vec_label(v));
         return rep.odd_basis.size() == 3 && rep.odd_closed &&
                rep.even_closed_under_i;
       }});
}

// ---------------------------------------------------------------------------
// cybe suite.

void add_cybe_checks(std::vector<Check>& out, const RunConfig&) {
  const ParamSetPtr ps = RP();
  out.push_back({"cybe/defect-3dim", "symbolic", [ps](CheckContext& c) {
                   const LieData L = sl2_lie(ps);
                   const CybeReport r = cybe_defect(L, L.standard_r());
                   c.note(std::string("defect ") +
                          (r.zero ? "vanishes" : "is nonzero"));
                   c.note(std::string("alternating: ") +
                          (r.alternating ? "yes" : "no"));
                   c.note(std::string("ad-invariant: ") +
                          (r.invariant ? "yes" : "no"));
                   return !r.zero && r.alternating && r.invariant;
                 }});
  out.push_back({"cybe/defect-8dim", "symbolic", [ps](CheckContext& c) {
                   const LieData L = sl3_lie(ps);
                   const CybeReport r = cybe_defect(L, L.standard_r());
                   c.note(std::string("defect ") +
                          (r.zero ? "vanishes" : "is nonzero"));
                   return !r.zero && r.alternating && r.invariant;
                 }});
  out.push_back({"cybe/zero-r", "symbolic", [ps](CheckContext& c) {
                   const CybeReport r = cybe_defect(sl2_lie(ps), SparseVec{});
                   c.note("zero input gives zero defect");
                   return r.zero && r.alternating && r.invariant;
                 }});
  out.push_back({"cybe/orbit-membership", "symbolic", [ps](CheckContext& c) {
                   const OrbitCheckReport r = rmatrix_bracket_orbit_check(ps);
                   c.note(std::string("jacobiator in the quadric ideal: ") +
                          (r.jacobiator_in_ideal ? "yes" : "no"));
                   c.note(std::string("quadric central: ") +
                          (r.quadric_central ? "yes" : "no"));
                   if (!r.control_witness.empty())
                     c.note("control escapes via: " + r.control_witness);
                   return r.jacobiator_in_ideal && r.quadric_central &&
                          r.control_escapes;
                 }});
}

// ---------------------------------------------------------------------------
// Registry, artifacts, runner, assembly.

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names{
      "poisson-pencil", "qybe",    "spans",        "flatness",
      "pbw-nu",         "braided", "conjugations", "cybe"};
  return names;
}

void add_suite_checks(const std::string& suite, std::vector<Check>& out,
                      const RunConfig& cfg) {
  if (suite == "poisson-pencil") return add_poisson_checks(out, cfg);
  if (suite == "qybe") return add_qybe_checks(out, cfg);
  if (suite == "spans") return add_spans_checks(out, cfg);
  if (suite == "flatness") return add_flatness_checks(out, cfg);
  if (suite == "pbw-nu") return add_pbw_checks(out, cfg);
  if (suite == "braided") return add_braided_checks(out, cfg);
  if (suite == "conjugations") return add_conjugation_checks(out, cfg);
  if (suite == "cybe") return add_cybe_checks(out, cfg);
  throw Error("unknown suite: " + suite);
}

std::vector<Check> build_checks(const RunConfig& cfg) {
  std::vector<Check> out;
  if (cfg.suite == "all") {
    for (const auto& s : registry_names()) add_suite_checks(s, out, cfg);
  } else {
    add_suite_checks(cfg.suite, out, cfg);
  }
  return out;
}

// Suite-specific data tables, recomputed single-threaded after the checks.
Json build_artifacts(const RunConfig& cfg) {
  Json art = Json::object();
  const ParamSetPtr ps = RP();
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "braided") {
    const QLieBracket br = q_lie_bracket(ps);
    Json table = Json::array();
    for (int k = 0; k <= 5; ++k) {
      const BraidedStructure bs = braided_structure(br, irrep(k, ps));
      Json row = Json::object();
      row["k"] = k;
      row["c0"] = bs.c0.to_string();
      row["c0_at_q1"] = bs.c0.substitute("q", Rat(1)).to_string();
      table.push_back(std::move(row));
    }
    art["c0_table"] = std::move(table);
    art["rescaling"] = br.rescaling;
    art["quantum_dimension_2dim"] =
        quantum_dimension(irrep(1, ps)).to_string();
  }
  if (all || cfg.suite == "conjugations") {
    const QLieBracket br = q_lie_bracket(ps);
    Json conj = Json::object();
    Json diag = Json::array();
    for (const auto& t : classify_diagonal_conjugations(br.bracket))
      diag.push_back(diag_label(t));
    conj["diagonal_compatible"] = std::move(diag);
    Json scans = Json::array();
    for (const Rat& q0 : {Rat(2), Rat(3), Rat(5) / 2, Rat(1)}) {
      const ConjugationScan s = conjugation_scan_at(br, q0);
      Json row = Json::object();
      row["q"] = rat_str(s.q);
      row["basis_size"] = s.basis_size;
      row["two_point_certified"] = s.two_point_certified;
      row["residuals"] = s.residuals;
      scans.push_back(std::move(row));
    }
    conj["scans"] = std::move(scans);
    const auto odd =
        odd_subalgebra_check(br.bracket, sign_diag(ps, 1, -1, 1), ps);
    Json ob = Json::array();
    for (const auto& v : odd.odd_basis) ob.push_back(vec_label(v));
    conj["odd_basis_mixed_diagonal"] = std::move(ob);
    art["conjugation_report"] = std::move(conj);
  }
  return art;
}

Json config_echo(const RunConfig& cfg) {
  Json c = Json::object();
  c["suite"] = cfg.suite;
  c["n"] = cfg.n;
  c["degree"] = cfg.degree;
  c["mode"] = cfg.mode;
  c["seed"] = cfg.seed;
  c["relations"] = cfg.relations_path;
  Json params = Json::object();
  for (const auto& [k, v] : cfg.params) params[k] = rat_str(v);
  c["params"] = std::move(params);
  return c;
}

void validate_config(const RunConfig& cfg) {
  const auto& names = registry_names();
  require(cfg.suite == "all" ||
              std::find(names.begin(), names.end(), cfg.suite) != names.end(),
          "unknown suite: " + cfg.suite);
  require(cfg.mode == "symbolic" || cfg.mode == "probabilistic",
          "mode must be symbolic or probabilistic, got: " + cfg.mode);
  require(cfg.n == 2 || cfg.n == 3, "n must be 2 or 3");
  require(cfg.degree >= 2 && cfg.degree <= 6,
          "degree must be between 2 and 6");
  require(cfg.workers >= 1 && cfg.workers <= 64,
          "workers must be between 1 and 64");
  for (const auto& [k, v] : cfg.params)
    require(RP()->find(k) >= 0, "unknown parameter in config: " + k);
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names = registry_names();
  names.push_back("all");
  return names;
}

Json run_suite(const RunConfig& cfg) {
  validate_config(cfg);
  std::vector<Check> checks = build_checks(cfg);

  struct Slot {
    std::string verdict;
    std::vector<std::string> witnesses;
    long long ms = 0;
  };
  std::vector<Slot> slots(checks.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      const auto t0 = std::chrono::steady_clock::now();
      CheckContext ctx;
      ctx.cfg = &cfg;
      std::string verdict;
      try {
        verdict = checks[i].fn(ctx) ? "PASS" : "FAIL";
      } catch (const std::exception& e) {
        verdict = "FAIL";
        ctx.witnesses.push_back(std::string("error: ") + e.what());
      }
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      slots[i] = Slot{std::move(verdict), std::move(ctx.witnesses), ms};
    }
  };
  {
    const size_t nthreads =
        std::min<size_t>(static_cast<size_t>(cfg.workers), checks.size());
    std::vector<std::thread> pool;
    for (size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  // Single-threaded assembly, ordered by check name.
  std::vector<size_t> order(checks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return checks[a].name < checks[b].name;
  });
  for (size_t i = 1; i < order.size(); ++i)
    require(checks[order[i - 1]].name != checks[order[i]].name,
            "internal: duplicate check name " + checks[order[i]].name);

  Json report = Json::object();
  report["artifact"] = "verification-report";
  report["version"] = kReportVersion;
  report["suite"] = cfg.suite;
  report["config"] = config_echo(cfg);
  Json jchecks = Json::array();
  size_t passed = 0;
  for (const size_t i : order) {
    Json jc = Json::object();
    jc["name"] = checks[i].name;
    jc["mode"] = checks[i].mode;
    jc["verdict"] = slots[i].verdict;
    jc["witnesses"] = slots[i].witnesses;
    jc["time_ms"] = slots[i].ms;
    if (slots[i].verdict == "PASS") ++passed;
    jchecks.push_back(std::move(jc));
  }
  report["checks"] = std::move(jchecks);
  const Json art = build_artifacts(cfg);
  if (!art.empty()) report["artifacts"] = art;
  Json summary = Json::object();
  summary["checks"] = checks.size();
  summary["passed"] = passed;
  summary["failed"] = checks.size() - passed;
  summary["verdict"] = (passed == checks.size()) ? "PASS" : "FAIL";
  report["summary"] = std::move(summary);
  return report;
}

bool report_all_pass(const Json& report) {
  return report.contains("summary") &&
         report["summary"].value("verdict", "FAIL") == "PASS";
}

std::string first_failure(const Json& report) {
  if (!report.contains("checks")) return "";
  for (const auto& c : report["checks"])
    if (c.value("verdict", "FAIL") != "PASS") return c.value("name", "?");
  return "";
}

namespace {
void strip_volatile(Json& j) {
  if (j.is_object()) {
    j.erase("time_ms");
    for (auto& [k, v] : j.items()) strip_volatile(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_volatile(v);
  }
}

void diff_walk(const std::string& path, const Json& a, const Json& b,
               std::vector<DiffEntry>& out) {
  if (a == b) return;
  if (a.is_object() && b.is_object()) {
    for (const auto& [k, v] : a.items()) {
      const std::string sub = path.empty() ? k : path + "/" + k;
      if (b.contains(k))
        diff_walk(sub, v, b.at(k), out);
      else
        out.push_back({sub, v.dump(), "<absent>"});
    }
    for (const auto& [k, v] : b.items())
      if (!a.contains(k))
        out.push_back({path.empty() ? k : path + "/" + k, "<absent>",
                       v.dump()});
    return;
  }
  if (a.is_array() && b.is_array()) {
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      const std::string sub = path + "/" + std::to_string(i);
      if (i >= a.size())
        out.push_back({sub, "<absent>", b[i].dump()});
      else if (i >= b.size())
        out.push_back({sub, a[i].dump(), "<absent>"});
      else
        diff_walk(sub, a[i], b[i], out);
    }
    return;
  }
  out.push_back({path, a.dump(), b.dump()});
}
}  // namespace

Json canonical_report(Json report) {
  strip_volatile(report);
  return report;
}

std::vector<DiffEntry> diff_reports(const Json& a, const Json& b) {
  require(a.value("suite", "") == b.value("suite", ""),
          "diff: reports come from different suites");
  std::vector<DiffEntry> out;
  diff_walk("", canonical_report(a), canonical_report(b), out);
  return out;
}

void write_report(const Json& report, const std::string& path) {
  std::ofstream f(path);
  require(f.good(), "cannot open report output: " + path);
  f << report.dump(2) << "\n";
  require(f.good(), "failed writing report: " + path);
}

// ---------------------------------------------------------------------------
// Configuration files.

namespace {
std::string trimmed(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Rat parse_rat(const std::string& text, const std::string& what) {
  try {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("config: bad rational for " + what + ": '" + text + "'");
  }
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    require(used == text.size(), "trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error("config: bad integer for " + what + ": '" + text + "'");
  }
}
}  // namespace

void set_config_entry(RunConfig& cfg, const std::string& key,
                      const std::string& value) {
  if (key == "suite") {
    cfg.suite = value;
  } else if (key == "n") {
    cfg.n = parse_int(value, key);
  } else if (key == "degree") {
    cfg.degree = parse_int(value, key);
  } else if (key == "mode") {
    cfg.mode = value;
  } else if (key == "seed") {
    try {
      size_t used = 0;
      cfg.seed = std::stoull(value, &used);
      require(used == value.size(), "trailing characters");
    } catch (const std::exception&) {
      throw Error("config: bad seed: '" + value + "'");
    }
  } else if (key == "workers") {
    cfg.workers = parse_int(value, key);
  } else if (key == "relations") {
    cfg.relations_path = value;
  } else if (key == "out") {
    cfg.out_path = value;
  } else if (key.rfind("param.", 0) == 0) {
    const std::string name = key.substr(6);
    require(!name.empty(), "config: empty parameter name");
    cfg.params.emplace_back(name, parse_rat(value, key));
  } else {
    throw Error("config: unknown key '" + key + "'");
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  require(f.good(), "cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    const size_t eq = t.find('=');
    require(eq != std::string::npos, "config: missing '=' at " + path + ":" +
                                         std::to_string(lineno));
    set_config_entry(cfg, trimmed(t.substr(0, eq)), trimmed(t.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace qpencil
