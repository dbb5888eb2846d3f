#include "qpencil/linalg.hpp"

#include <algorithm>

namespace qpencil {

SparseVec sv_normalized(SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second = out.back().second + e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

SparseVec sv_scaled(const SparseVec& a, const Scalar& k) {
  if (k.is_zero()) return {};
  SparseVec out;
  out.reserve(a.size());
  for (const auto& e : a) out.emplace_back(e.first, e.second * k);
  return out;
}

SparseVec sv_combine(const SparseVec& a, const Scalar& ca, const SparseVec& b,
                     const Scalar& cb) {
  return sv_add(sv_scaled(a, ca), sv_scaled(b, cb));
}

const Scalar* sv_get(const SparseVec& v, uint32_t col) {
  auto it = std::lower_bound(
      v.begin(), v.end(), col,
      [](const auto& e, uint32_t c) { return e.first < c; });
  if (it != v.end() && it->first == col) return &it->second;
  return nullptr;
}

bool sv_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  }
  return true;
}

SparseVec sv_content_normalized(SparseVec v, const ParamSetPtr& ps) {
  if (v.empty()) return v;
  // Clear denominators: multiply the row by the product of the distinct
  // denominators, each entry picking up the product of the others.
  std::vector<IPoly> dens;
  for (const auto& e : v) {
    const IPoly& d = e.second.den();
    if (d.is_constant() && d.constant_value() == 1) continue;
    bool seen = false;
    for (const auto& known : dens) {
      if (known == d) {
        seen = true;
        break;
      }
    }
    if (!seen) dens.push_back(d);
  }
  if (!dens.empty()) {
    for (auto& e : v) {
      IPoly p = e.second.num();
      for (const auto& d : dens) {
        if (!(d == e.second.den())) p = p * d;
      }
      e.second = Scalar(std::move(p), IPoly::constant(ps, 1));
    }
  }
  // Strip joint integer and monomial content of the numerators.
  Int c = 0;
  for (const auto& e : v) {
    c = boost::multiprecision::gcd(c, e.second.num().int_content());
  }
  Mono m;
  bool first = true;
  for (const auto& e : v) {
    Mono em = e.second.num().mono_content();
    if (first) {
      m = em;
      first = false;
    } else {
      for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], em[k]);
    }
  }
  bool mono_trivial = true;
  for (auto x : m) {
    if (x != 0) mono_trivial = false;
  }
  if ((c != 0 && c != 1) || !mono_trivial) {
    for (auto& e : v) {
      IPoly p = e.second.num();
      if (c != 0 && c != 1) p.divide_int(c);
      if (!mono_trivial) p.divide_mono(m);
      e.second = Scalar(std::move(p), IPoly::constant(ps, 1));
    }
  }
  // Sign: leading entry's leading coefficient positive.
  if (v.front().second.num().lead().c < 0) {
    for (auto& e : v) e.second = -e.second;
  }
  return v;
}

// ---------------------------------------------------------------------------

bool Subspace::insert(SparseVec v) {
  v = sv_normalized(std::move(v));
  size_t i = 0;
  while (i < v.size()) {
    uint32_t c = v[i].first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    const SparseVec& r = it->second;
    const Scalar* rp = sv_get(r, c);
    // v <- v*rp - r*v[c]; entries before position i are untouched because
    // both rows have no support below c there.
    v = sv_combine(v, *rp, r, -v[i].second);
    v = sv_content_normalized(std::move(v), ps_);
    // Column c is now zero in v; resume scanning from the same position.
  }
  if (v.empty()) return false;
  v = sv_content_normalized(std::move(v), ps_);
  rows_.emplace(v.front().first, std::move(v));
  canon_valid_ = false;
  return true;
}

SparseVec Subspace::reduce(SparseVec v) const {
  v = sv_normalized(std::move(v));
  size_t i = 0;
  while (i < v.size()) {
    uint32_t c = v[i].first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    const SparseVec& r = it->second;
    const Scalar* rp = sv_get(r, c);
    v = sv_combine(v, *rp, r, -v[i].second);
    v = sv_content_normalized(std::move(v), ps_);
  }
  return v;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& [p, r] : o.rows_) {
    (void)p;
    if (!contains(r)) return false;
  }
  return true;
}

bool Subspace::equals(const Subspace& o) const {
  if (ncols_ != o.ncols_ || rows_.size() != o.rows_.size()) return false;
  const auto& a = canonical_rows();
  const auto& b = o.canonical_rows();
  for (size_t i = 0; i < a.size(); ++i) {
    if (!sv_equal(a[i], b[i])) return false;
  }
  return true;
}

const std::vector<SparseVec>& Subspace::canonical_rows() const {
  if (canon_valid_) return canon_;
  // Back-substitute: process pivots in descending order, eliminating every
  // entry a row has at a higher pivot column, then scale pivots to 1.
  std::map<uint32_t, SparseVec> work = rows_;
  for (auto it = work.rbegin(); it != work.rend(); ++it) {
    SparseVec& r = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : r) {
        if (e.first == it->first) continue;
        auto jt = work.find(e.first);
        if (jt == work.end() || jt->first == it->first) continue;
        const Scalar* pp = sv_get(jt->second, jt->first);
        r = sv_combine(r, *pp, jt->second, -e.second);
        r = sv_content_normalized(std::move(r), ps_);
        changed = true;
        break;
      }
    }
  }
  canon_.clear();
  canon_.reserve(work.size());
  for (auto& [p, r] : work) {
    const Scalar* pp = sv_get(r, p);
    Scalar inv = pp->inverse();
    canon_.push_back(sv_scaled(r, inv));
  }
  canon_valid_ = true;
  return canon_;
}

Subspace Subspace::sum(const Subspace& o) const {
  require(ncols_ == o.ncols_, "subspace sum: column counts differ");
  Subspace s = *this;
  for (const auto& [p, r] : o.rows_) {
    (void)p;
    s.insert(r);
  }
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(ncols_ == o.ncols_, "subspace intersect: column counts differ");
  // Zassenhaus: echelonize rows [a|a] for a in this and [b|0] for b in the
  // other; echelon rows supported entirely in the right block carry the
  // intersection in their right halves.
  Subspace stacked(2 * ncols_, ps_);
  for (const auto& [p, r] : rows_) {
    (void)p;
    SparseVec d;
    d.reserve(2 * r.size());
    for (const auto& e : r) d.emplace_back(e.first, e.second);
    for (const auto& e : r) d.emplace_back(e.first + ncols_, e.second);
    stacked.insert(std::move(d));
  }
  for (const auto& [p, r] : o.rows_) {
    (void)p;
    stacked.insert(r);
  }
  Subspace result(ncols_, ps_);
  for (const auto& [p, r] : stacked.rows_) {
    if (p < ncols_) continue;
    SparseVec half;
    half.reserve(r.size());
    for (const auto& e : r) half.emplace_back(e.first - ncols_, e.second);
    result.insert(std::move(half));
  }
  return result;
}

size_t Subspace::rows_supported_from(uint32_t from) const {
  size_t n = 0;
  for (const auto& [p, r] : rows_) {
    (void)r;
    if (p >= from) ++n;
  }
  return n;
}

Subspace kernel_of_rows(const std::vector<SparseVec>& rows, uint32_t ncols,
                        const ParamSetPtr& ps) {
  Subspace eq(ncols, ps);
  for (const auto& r : rows) eq.insert(r);
  const auto& rref = eq.canonical_rows();
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& r : rref) is_pivot[r.front().first] = true;
  Subspace ker(ncols, ps);
  for (uint32_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec x;
    x.emplace_back(f, Scalar::one(ps));
    for (const auto& r : rref) {
      const Scalar* c = sv_get(r, f);
      if (c) x.emplace_back(r.front().first, -*c);
    }
    ker.insert(std::move(x));
  }
  return ker;
}

// ---------------------------------------------------------------------------

LinOp LinOp::identity(uint32_t dim, ParamSetPtr ps) {
  LinOp op(dim, dim, ps);
  for (uint32_t j = 0; j < dim; ++j) op.set(j, j, Scalar::one(ps));
  return op;
}

void LinOp::set(uint32_t row, uint32_t col, Scalar v) {
  require(row < out_ && col < in_, "operator entry out of range");
  SparseVec& c = cols_.at(col);
  auto it = std::lower_bound(
      c.begin(), c.end(), row,
      [](const auto& e, uint32_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    if (v.is_zero()) {
      c.erase(it);
    } else {
      it->second = std::move(v);
    }
  } else if (!v.is_zero()) {
    c.insert(it, {row, std::move(v)});
  }
}

void LinOp::add(uint32_t row, uint32_t col, const Scalar& v) {
  Scalar cur = get(row, col);
  set(row, col, cur + v);
}

Scalar LinOp::get(uint32_t row, uint32_t col) const {
  require(row < out_ && col < in_, "operator entry out of range");
  const Scalar* p = sv_get(cols_.at(col), row);
  return p ? *p : Scalar::zero(ps_);
}

SparseVec LinOp::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& e : v) {
    require(e.first < in_, "operator applied to vector of wrong dimension");
    out = sv_add(out, sv_scaled(cols_.at(e.first), e.second));
  }
  return out;
}

LinOp LinOp::compose(const LinOp& inner) const {
  require(inner.out_ == in_, "operator composition: dimension mismatch");
  LinOp r(inner.in_, out_, ps_);
  for (uint32_t j = 0; j < inner.in_; ++j) {
    r.cols_[j] = apply(inner.cols_[j]);
  }
  return r;
}

LinOp LinOp::operator+(const LinOp& o) const {
  require(in_ == o.in_ && out_ == o.out_, "operator sum: dimension mismatch");
  LinOp r(in_, out_, ps_);
  for (uint32_t j = 0; j < in_; ++j) r.cols_[j] = sv_add(cols_[j], o.cols_[j]);
  return r;
}

LinOp LinOp::operator-(const LinOp& o) const {
  return *this + o.scaled(Scalar::integer(ps_, -1));
}

LinOp LinOp::scaled(const Scalar& k) const {
  LinOp r(in_, out_, ps_);
  for (uint32_t j = 0; j < in_; ++j) r.cols_[j] = sv_scaled(cols_[j], k);
  return r;
}

bool LinOp::operator==(const LinOp& o) const {
  if (in_ != o.in_ || out_ != o.out_) return false;
  for (uint32_t j = 0; j < in_; ++j) {
    if (!sv_equal(cols_[j], o.cols_[j])) return false;
  }
  return true;
}

bool LinOp::is_zero() const {
  for (const auto& c : cols_) {
    if (!c.empty()) return false;
  }
  return true;
}

LinOp LinOp::transpose() const {
  LinOp r(out_, in_, ps_);
  for (uint32_t j = 0; j < in_; ++j) {
    for (const auto& e : cols_[j]) r.set(j, e.first, e.second);
  }
  return r;
}

Subspace LinOp::image() const {
  Subspace s(out_, ps_);
  for (const auto& c : cols_) s.insert(c);
  return s;
}

Subspace LinOp::kernel() const {
  LinOp t = transpose();
  std::vector<SparseVec> rows(t.cols_.begin(), t.cols_.end());
  return kernel_of_rows(rows, in_, ps_);
}

LinOp LinOp::inverse() const {
  require(in_ == out_, "operator inverse: not square");
  uint32_t n = in_;
  // Augmented elimination [M | I] -> [I | M^-1], dense over Scalar.
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, Scalar::zero(ps_)));
  for (uint32_t j = 0; j < n; ++j) {
    for (const auto& e : cols_[j]) a[e.first][j] = e.second;
  }
  for (uint32_t i = 0; i < n; ++i) a[i][n + i] = Scalar::one(ps_);
  for (uint32_t c = 0; c < n; ++c) {
    uint32_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    require(piv < n, "operator inverse: operator is singular");
    std::swap(a[c], a[piv]);
    Scalar inv = a[c][c].inverse();
    for (uint32_t j = c; j < 2 * n; ++j) a[c][j] = a[c][j] * inv;
    for (uint32_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (uint32_t j = c; j < 2 * n; ++j) {
        a[i][j] = a[i][j] - f * a[c][j];
      }
    }
  }
  LinOp r(n, n, ps_);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) {
      if (!a[i][n + j].is_zero()) r.set(i, j, a[i][n + j]);
    }
  }
  return r;
}

LinOp LinOp::lift12(uint32_t m) const {
  require(in_ == m * m && out_ == m * m, "lift12: operator is not on a square tensor");
  LinOp r(m * m * m, m * m * m, ps_);
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j < m; ++j) {
      const SparseVec& img = cols_[i * m + j];
      for (uint32_t k = 0; k < m; ++k) {
        SparseVec out;
        out.reserve(img.size());
        for (const auto& e : img) {
          out.emplace_back(e.first * m + k, e.second);
        }
        r.cols_[(i * m + j) * m + k] = sv_normalized(std::move(out));
      }
    }
  }
  return r;
}

LinOp LinOp::lift23(uint32_t m) const {
  require(in_ == m * m && out_ == m * m, "lift23: operator is not on a square tensor");
  LinOp r(m * m * m, m * m * m, ps_);
  for (uint32_t i = 0; i < m; ++i) {
    for (uint32_t j = 0; j < m; ++j) {
      const SparseVec& img = cols_[i * m + j];
      for (uint32_t k = 0; k < m; ++k) {
        SparseVec out;
        out.reserve(img.size());
        for (const auto& e : img) {
          out.emplace_back(k * m * m + e.first, e.second);
        }
        r.cols_[k * m * m + i * m + j] = sv_normalized(std::move(out));
      }
    }
  }
  return r;
}

LinOp LinOp::tensor(const LinOp& o) const {
  LinOp r(in_ * o.in_, out_ * o.out_, ps_);
  for (uint32_t j1 = 0; j1 < in_; ++j1) {
    for (uint32_t j2 = 0; j2 < o.in_; ++j2) {
      SparseVec out;
      for (const auto& e1 : cols_[j1]) {
        for (const auto& e2 : o.cols_[j2]) {
          out.emplace_back(e1.first * o.out_ + e2.first, e1.second * e2.second);
        }
      }
      r.cols_[j1 * o.in_ + j2] = sv_normalized(std::move(out));
    }
  }
  return r;
}

Scalar LinOp::trace() const {
  require(in_ == out_, "operator trace: not square");
  Scalar t = Scalar::zero(ps_);
  for (uint32_t j = 0; j < in_; ++j) {
    const Scalar* d = sv_get(cols_[j], j);
    if (d) t = t + *d;
  }
  return t;
}

SparseVec sv_substituted(const SparseVec& v, const std::string& name,
                         const Rat& val) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [pos, s] : v) out.emplace_back(pos, s.substitute(name, val));
  return sv_normalized(std::move(out));
}

LinOp op_substituted(const LinOp& op, const std::string& name, const Rat& val) {
  LinOp r(op.dim_in(), op.dim_out(), op.params());
  for (uint32_t j = 0; j < op.dim_in(); ++j) {
    r.set_col(j, sv_substituted(op.col(j), name, val));
  }
  return r;
}

std::vector<IPoly> echelon_ipolys(const std::vector<IPoly>& raw,
                                  const ParamSetPtr& ps) {
  std::vector<Mono> monos;
  for (const auto& p : raw)
    for (const auto& term : p.terms()) {
      bool found = false;
      for (const auto& m : monos)
        if (m == term.m) {
          found = true;
          break;
        }
      if (!found) monos.push_back(term.m);
    }
  std::sort(monos.begin(), monos.end(),
            [](const Mono& a, const Mono& b) { return mono_grlex_less(b, a); });
  Subspace span(static_cast<uint32_t>(monos.size()), ps);
  for (const auto& p : raw) {
    SparseVec v;
    for (uint32_t c = 0; c < monos.size(); ++c)
      for (const auto& term : p.terms())
        if (term.m == monos[c]) {
          v.emplace_back(
              c, Scalar::from_poly(IPoly::monomial(ps, Mono(ps->size(), 0),
                                                   term.c)));
          break;
        }
    span.insert(sv_normalized(std::move(v)));
  }
  std::vector<IPoly> out;
  for (const auto& row : span.canonical_rows()) {
    Scalar s = Scalar::zero(ps);
    for (const auto& e : row)
      s += e.second * Scalar::from_poly(IPoly::monomial(ps, monos[e.first], 1));
    IPoly p = s.num();
    Int c = p.int_content();
    if (c > 1) p.divide_int(c);
    if (!p.is_zero() && p.lead().c < 0) p = -p;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qpencil
