#include "qpencil/bracket.hpp"

#include <fstream>
#include <sstream>

#include "qpencil/linalg.hpp"
#include "qpencil/parser.hpp"

namespace qpencil {

BracketTable::BracketTable(GenSetPtr gens, ParamSetPtr ps)
    : gens_(std::move(gens)), ps_(std::move(ps)) {
  require(gens_ != nullptr && ps_ != nullptr,
          "bracket table needs generator and parameter sets");
  const size_t n = gens_->size();
  t_.assign(n, std::vector<CPoly>(n, CPoly::zero(gens_, ps_)));
}

void BracketTable::set(size_t i, size_t j, CPoly p) {
  require(i < gens_->size() && j < gens_->size(),
          "bracket table index out of range");
  require(i != j, "bracket of a generator with itself is identically zero");
  check_same_gens(gens_, p.gens());
  check_same(ps_, p.params());
  t_[j][i] = -p;
  t_[i][j] = std::move(p);
}

const CPoly& BracketTable::entry(size_t i, size_t j) const {
  require(i < gens_->size() && j < gens_->size(),
          "bracket table index out of range");
  return t_[i][j];
}

CPoly BracketTable::eval(const CPoly& f, const CPoly& g) const {
  check_same_gens(gens_, f.gens());
  check_same_gens(gens_, g.gens());
  const size_t n = gens_->size();
  std::vector<CPoly> df, dg;
  df.reserve(n);
  dg.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dg.push_back(g.derivative(i));
  }
  CPoly out = CPoly::zero(gens_, ps_);
  for (size_t i = 0; i < n; ++i) {
    if (df[i].is_zero() && dg[i].is_zero()) continue;
    for (size_t j = i + 1; j < n; ++j) {
      if (t_[i][j].is_zero()) continue;
      CPoly cross = df[i] * dg[j] - df[j] * dg[i];
      if (!cross.is_zero()) out += t_[i][j] * cross;
    }
  }
  return out;
}

BracketTable BracketTable::map_coeffs(
    const std::function<Scalar(const Scalar&)>& fn) const {
  BracketTable out(gens_, ps_);
  const size_t n = gens_->size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!t_[i][j].is_zero()) out.set(i, j, t_[i][j].map_coeffs(fn));
  return out;
}

int BracketTable::max_entry_degree() const {
  int d = -1;
  for (const auto& row : t_)
    for (const auto& e : row) d = std::max(d, e.total_degree());
  return d;
}

CPoly jacobiator(const BracketTable& t, const CPoly& f, const CPoly& g,
                 const CPoly& h) {
  return t.eval(f, t.eval(g, h)) + t.eval(g, t.eval(h, f)) +
         t.eval(h, t.eval(f, g));
}

CPoly mixed_jacobiator(const BracketTable& t1, const BracketTable& t2,
                       const CPoly& f, const CPoly& g, const CPoly& h) {
  auto both = [&](const CPoly& a, const CPoly& b, const CPoly& c) {
    return t2.eval(a, t1.eval(b, c)) + t1.eval(a, t2.eval(b, c));
  };
  return both(f, g, h) + both(g, h, f) + both(h, f, g);
}

std::vector<TripleFailure> jacobi_failures(const BracketTable& t) {
  std::vector<TripleFailure> out;
  const size_t n = t.gens()->size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        CPoly v = jacobiator(t, CPoly::gen(t.gens(), t.params(), i),
                             CPoly::gen(t.gens(), t.params(), j),
                             CPoly::gen(t.gens(), t.params(), k));
        if (!v.is_zero()) out.push_back({i, j, k, std::move(v)});
      }
  return out;
}

std::vector<TripleFailure> mixed_jacobi_failures(const BracketTable& t1,
                                                 const BracketTable& t2) {
  check_same_gens(t1.gens(), t2.gens());
  std::vector<TripleFailure> out;
  const size_t n = t1.gens()->size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        CPoly v = mixed_jacobiator(t1, t2, CPoly::gen(t1.gens(), t1.params(), i),
                                   CPoly::gen(t1.gens(), t1.params(), j),
                                   CPoly::gen(t1.gens(), t1.params(), k));
        if (!v.is_zero()) out.push_back({i, j, k, std::move(v)});
      }
  return out;
}

Scalar scalar_coeff_of(const Scalar& s, const std::string& name, int k) {
  const auto& ps = s.params();
  const size_t idx = ps->index(name);
  require(!s.den().occurs(idx), "coefficient extraction in " + name +
                                    ": denominator involves it: " +
                                    s.to_string());
  IPoly sel = IPoly::zero(ps);
  auto& terms = sel.mutable_terms();
  for (const auto& t : s.num().terms()) {
    if (t.m[idx] != k) continue;
    Mono m = t.m;
    m[idx] = 0;
    terms.push_back({std::move(m), t.c});
  }
  sel.normalize();
  return Scalar(std::move(sel), s.den());
}

ShiftResult shift_and_linearize(const BracketTable& t,
                                const std::vector<Scalar>& shift,
                                const std::string& h_name) {
  const auto& gens = t.gens();
  const auto& ps = t.params();
  const size_t n = gens->size();
  require(shift.size() == n, "shift data must cover every generator");
  const size_t h = ps->index(h_name);
  const Scalar hp = Scalar::param(ps, h_name);

  ShiftResult res{BracketTable(gens, ps), BracketTable(gens, ps)};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      CPoly e = t.entry(i, j);
      if (e.is_zero()) continue;
      for (const auto& term : e.terms())
        require(!term.c.num().occurs(h) && !term.c.den().occurs(h),
                "bracket table already involves the shift parameter " + h_name);
      for (size_t k = 0; k < n; ++k) {
        if (shift[k].is_zero()) continue;
        CPoly repl = CPoly::gen(gens, ps, k) +
                     CPoly::from_scalar(gens, hp * shift[k]);
        e = e.substitute_gen(k, repl);
      }
      CPoly e0 = CPoly::zero(gens, ps), e1 = CPoly::zero(gens, ps);
      for (const auto& term : e.terms()) {
        Scalar c0 = scalar_coeff_of(term.c, h_name, 0);
        Scalar c1 = scalar_coeff_of(term.c, h_name, 1);
        require(term.c == c0 + c1 * hp,
                "shifted bracket entry has degree above 1 in " + h_name +
                    ": " + e.to_string());
        if (!c0.is_zero()) e0 += CPoly::monomial(gens, term.m, c0);
        if (!c1.is_zero()) e1 += CPoly::monomial(gens, term.m, c1);
      }
      res.shifted.set(i, j, e);
      if (!e1.is_zero()) res.linear.set(i, j, e1);
    }
  }
  return res;
}

// --- catalog ---------------------------------------------------------------

namespace {

// 0-based (row, col) -> generator index in matrix_gens(n) order.
size_t midx(int n, int r, int c) { return static_cast<size_t>(r) * n + c; }

CPoly mgen(const GenSetPtr& g, const ParamSetPtr& ps, int n, int r, int c) {
  return CPoly::gen(g, ps, midx(n, r, c));
}

}  // namespace

BracketTable sklyanin2(int n, const ParamSetPtr& ps) {
  require(n >= 2, "matrix-coordinate bracket needs n >= 2");
  auto gens = matrix_gens(n);
  BracketTable t(gens, ps);
  auto x = [&](int r, int c) { return mgen(gens, ps, n, r, c); };
  const Scalar two = Scalar::integer(ps, 2);
  for (int r1 = 0; r1 < n; ++r1)
    for (int c1 = 0; c1 < n; ++c1)
      for (int r2 = r1; r2 < n; ++r2)
        for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < n; ++c2) {
          size_t i = midx(n, r1, c1), j = midx(n, r2, c2);
          if (r1 == r2 || c1 == c2) {
            t.set(i, j, x(r1, c1) * x(r2, c2));
          } else if (r1 < r2 && c1 < c2) {
            t.set(i, j, (x(r1, c2) * x(r2, c1)).scaled(two));
          }
          // r1 < r2 with c1 > c2: the bracket vanishes.
        }
  return t;
}

BracketTable linear1(int n, const ParamSetPtr& ps) {
  require(n >= 2, "matrix-coordinate bracket needs n >= 2");
  auto gens = matrix_gens(n);
  BracketTable t(gens, ps);
  auto x = [&](int r, int c) { return mgen(gens, ps, n, r, c); };
  const Scalar two = Scalar::integer(ps, 2);
  for (int r1 = 0; r1 < n; ++r1)
    for (int c1 = 0; c1 < n; ++c1)
      for (int r2 = r1; r2 < n; ++r2)
        for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < n; ++c2) {
          size_t i = midx(n, r1, c1), j = midx(n, r2, c2);
          CPoly e = CPoly::zero(gens, ps);
          if (r1 == r2 || c1 == c2) {
            if (r1 == c1) e += x(r2, c2);
            if (r2 == c2) e += x(r1, c1);
          } else if (r1 < r2 && c1 < c2) {
            if (r1 == c2) e += x(r2, c1).scaled(two);
            if (r2 == c1) e += x(r1, c2).scaled(two);
          }
          if (!e.is_zero()) t.set(i, j, e);
        }
  return t;
}

BracketTable gl_bracket(int n, const ParamSetPtr& ps) {
  require(n >= 2, "matrix-coordinate bracket needs n >= 2");
  auto gens = matrix_gens(n);
  BracketTable t(gens, ps);
  auto x = [&](int r, int c) { return mgen(gens, ps, n, r, c); };
  for (int r1 = 0; r1 < n; ++r1)
    for (int c1 = 0; c1 < n; ++c1)
      for (int r2 = r1; r2 < n; ++r2)
        for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < n; ++c2) {
          CPoly e = CPoly::zero(gens, ps);
          if (r2 == c1) e += x(r1, c2);
          if (r1 == c2) e -= x(r2, c1);
          if (!e.is_zero()) t.set(midx(n, r1, c1), midx(n, r2, c2), e);
        }
  return t;
}

BracketTable elliptic_bracket(const ParamSetPtr& ps) {
  auto gens = make_gens({"S0", "S1", "S2", "S3"});
  BracketTable t(gens, ps);
  auto S = [&](size_t i) { return CPoly::gen(gens, ps, i); };
  auto J = [&](const std::string& n) {
    return CPoly::from_scalar(gens, Scalar::param(ps, n));
  };
  const Scalar two = Scalar::integer(ps, 2);
  const Scalar mtwo = Scalar::integer(ps, -2);
  t.set(1, 0, (J("J23") * S(2) * S(3)).scaled(two));
  t.set(2, 0, (J("J31") * S(3) * S(1)).scaled(two));
  t.set(3, 0, (J("J12") * S(1) * S(2)).scaled(two));
  t.set(1, 2, (S(0) * S(3)).scaled(mtwo));
  t.set(2, 3, (S(0) * S(1)).scaled(mtwo));
  t.set(3, 1, (S(0) * S(2)).scaled(mtwo));
  return t;
}

BracketTable kks_sl2(const ParamSetPtr& ps) {
  auto gens = make_gens({"H", "X", "Y"});
  BracketTable t(gens, ps);
  auto g = [&](size_t i) { return CPoly::gen(gens, ps, i); };
  t.set(0, 1, g(1).scaled(Scalar::integer(ps, 2)));   // {H,X} = 2X
  t.set(0, 2, g(2).scaled(Scalar::integer(ps, -2)));  // {H,Y} = -2Y
  t.set(1, 2, g(0));                                  // {X,Y} = H
  return t;
}

BracketTable rmat_sl2(const ParamSetPtr& ps) {
  auto gens = make_gens({"H", "X", "Y"});
  BracketTable t(gens, ps);
  auto g = [&](size_t i) { return CPoly::gen(gens, ps, i); };
  t.set(0, 1, g(0) * g(1));                                 // {H,X} = HX
  t.set(0, 2, -(g(0) * g(2)));                              // {H,Y} = -HY
  t.set(1, 2, (g(0) * g(0)).scaled(Scalar::rational(ps, 1, 2)));  // {X,Y} = H^2/2
  return t;
}

BracketTable bracket_catalog(const std::string& name, const ParamSetPtr& ps) {
  if (name == "elliptic") return elliptic_bracket(ps);
  if (name == "kks(sl2)") return kks_sl2(ps);
  if (name == "rmat(sl2)") return rmat_sl2(ps);
  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    const std::string base = name.substr(0, open);
    const std::string arg = name.substr(open + 1, name.size() - open - 2);
    if (base == "sklyanin2" || base == "linear1" || base == "gl") {
      int n = 0;
      try {
        size_t used = 0;
        n = std::stoi(arg, &used);
        require(used == arg.size(), "trailing characters");
      } catch (const std::exception&) {
        throw Error("bracket catalog: bad size argument in: " + name);
      }
      if (base == "sklyanin2") return sklyanin2(n, ps);
      if (base == "linear1") return linear1(n, ps);
      return gl_bracket(n, ps);
    }
  }
  throw Error("unknown bracket catalog entry: " + name);
}

BracketTable load_bracket_table(const std::string& path,
                                const ParamSetPtr& ps) {
  std::ifstream in(path);
  require(in.good(), "cannot open bracket table file: " + path);
  auto fail = [&](const std::string& msg, const std::string& line) {
    throw Error("bracket table file " + path + ": " + msg +
                (line.empty() ? "" : " in line: " + line));
  };
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };

  GenSetPtr gens;
  BracketTable t;
  std::vector<std::vector<bool>> seen;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!gens) {
      if (line.rfind("gens:", 0) != 0)
        fail("first entry must declare generators as 'gens: x y ...'", line);
      std::istringstream ss(line.substr(5));
      std::vector<std::string> names;
      std::string w;
      while (ss >> w) names.push_back(w);
      if (names.empty()) fail("no generators declared", line);
      gens = make_gens(names);
      t = BracketTable(gens, ps);
      seen.assign(names.size(), std::vector<bool>(names.size(), false));
      continue;
    }
    if (line[0] != '{') fail("expected '{x,y} = polynomial'", line);
    auto comma = line.find(',');
    auto close = line.find('}');
    if (comma == std::string::npos || close == std::string::npos ||
        comma > close)
      fail("malformed bracket pair", line);
    const std::string na = trim(line.substr(1, comma - 1));
    const std::string nb = trim(line.substr(comma + 1, close - comma - 1));
    auto eq = line.find('=', close);
    if (eq == std::string::npos) fail("missing '=' after bracket pair", line);
    const std::string rhs = trim(line.substr(eq + 1));
    int ia = gens->find(na), ib = gens->find(nb);
    if (ia < 0) fail("unknown generator '" + na + "'", line);
    if (ib < 0) fail("unknown generator '" + nb + "'", line);
    if (ia == ib) fail("bracket of a generator with itself must be omitted", line);
    if (seen[ia][ib]) fail("duplicate bracket entry for this pair", line);
    seen[ia][ib] = seen[ib][ia] = true;
    t.set(static_cast<size_t>(ia), static_cast<size_t>(ib),
          parse_cpoly(gens, ps, rhs));
  }
  if (!gens) throw Error("bracket table file " + path + ": no content");
  return t;
}

std::vector<int> row_column_signs(int n) {
  std::vector<int> s(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      s[midx(n, r, c)] = (c > r) - (c < r);
  return s;
}

bool r_twisted_check(int n, const ParamSetPtr& ps) {
  BracketTable lin = linear1(n, ps);
  BracketTable glb = gl_bracket(n, ps);
  std::vector<int> sg = row_column_signs(n);
  const size_t m = lin.gens()->size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      CPoly rhs = glb.entry(i, j).scaled(Scalar::integer(ps, sg[i] + sg[j]));
      if (lin.entry(i, j) != rhs) return false;
    }
  return true;
}

std::vector<IPoly> elliptic_constraints(const ParamSetPtr& ps) {
  BracketTable t = elliptic_bracket(ps);
  // Coefficients of all generator-triple Jacobiators, as integer polynomials
  // in the parameters.
  std::vector<IPoly> raw;
  for (const auto& f : jacobi_failures(t))
    for (const auto& term : f.value.terms()) {
      require(term.c.den().is_constant(),
              "jacobiator coefficient with non-constant denominator");
      raw.push_back(term.c.num());
    }
  // Canonical reduction: echelonize over the occurring parameter monomials.
  return echelon_ipolys(raw, ps);
}

}  // namespace qpencil
