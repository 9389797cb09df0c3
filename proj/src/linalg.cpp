#include "graphlie/linalg.hpp"

#include <algorithm>

#include "graphlie/errors.hpp"

namespace graphlie {

// ---------------------------------------------------------------------------
// SparseVector

SparseVector SparseVector::from_dense(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.entries_.push_back({i, v[i]});
  return out;
}

SparseVector SparseVector::from_map(const std::map<std::size_t, Rational>& m) {
  SparseVector out;
  out.entries_.reserve(m.size());
  for (const auto& [i, x] : m)
    if (x != 0) out.entries_.push_back({i, x});
  return out;
}

SparseVector SparseVector::unit(std::size_t i) {
  SparseVector out;
  out.entries_.push_back({i, Rational(1)});
  return out;
}

Vector SparseVector::to_dense(std::size_t n) const {
  Vector v(n);
  for (const auto& e : entries_) v.at(e.index) = e.value;
  return v;
}

Rational SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  return (it != entries_.end() && it->index == i) ? it->value : Rational(0);
}

void SparseVector::push_back(std::size_t i, Rational value) {
  if (!entries_.empty() && entries_.back().index >= i)
    throw std::logic_error("SparseVector::push_back: indices must increase");
  if (value != 0) entries_.push_back({i, std::move(value)});
}

SparseVector SparseVector::scaled(const Rational& s) const {
  SparseVector out;
  if (s == 0) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, e.value * s});
  return out;
}

void axpy(std::map<std::size_t, Rational>& acc, const Rational& s, const SparseVector& v) {
  if (s == 0) return;
  for (const auto& e : v.entries()) {
    auto [it, inserted] = acc.try_emplace(e.index, s * e.value);
    if (!inserted) {
      it->second += s * e.value;
      if (it->second == 0) acc.erase(it);
    }
  }
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

RatMatrix RatMatrix::from_dense(const std::vector<Vector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("RatMatrix::from_dense: ragged rows");
    m.rows_[r] = SparseVector::from_dense(rows[r]);
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(i);
  return m;
}

void RatMatrix::set_row(std::size_t r, SparseVector v) {
  if (!v.empty() && v.entries().back().index >= cols_)
    throw std::out_of_range("RatMatrix::set_row: column index out of range");
  rows_.at(r) = std::move(v);
}

void RatMatrix::append_row(SparseVector v) {
  rows_.emplace_back();
  set_row(rows_.size() - 1, std::move(v));
}

std::size_t RatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

bool RatMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

std::vector<Vector> RatMatrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_dense(cols_));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r].entries()) t.rows_[e.index].push_back(r, e.value);
  return t;
}

Vector RatMatrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw DomainError("RatMatrix::apply: length mismatch");
  Vector y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r].entries()) y[r] += e.value * x[e.index];
  return y;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: inner dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& e : a.row(r).entries()) axpy(acc, e.value, b.row(e.index));
    c.set_row(r, SparseVector::from_map(acc));
  }
  return c;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("vstack: column count mismatch");
  RatMatrix out(0, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.append_row(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

// ---------------------------------------------------------------------------
// Echelon

bool Echelon::reduce(std::map<std::size_t, Rational>& work,
                     std::map<std::size_t, Rational>* combo) const {
  auto it = work.begin();
  while (it != work.end()) {
    const std::size_t col = it->first;
    auto pr = rows_.find(col);
    if (pr == rows_.end()) return false;
    const Rational coef = it->second;
    axpy(work, -coef, pr->second.vec);
    if (combo) axpy(*combo, coef, pr->second.transform);
    it = work.upper_bound(col);
  }
  return true;
}

bool Echelon::insert(const SparseVector& v, std::size_t tag) {
  if (!v.empty() && v.entries().back().index >= ambient_)
    throw DomainError("Echelon::insert: vector longer than ambient dimension");
  std::map<std::size_t, Rational> work;
  for (const auto& e : v.entries()) work.emplace(e.index, e.value);
  std::map<std::size_t, Rational> combo;
  if (reduce(work, track_ ? &combo : nullptr)) return false;
  const auto lead = work.begin()->first;
  const Rational inv = 1 / work.begin()->second;
  Row row;
  row.vec = SparseVector::from_map(work).scaled(inv);
  if (track_) {
    // row = (e_tag - combo) / lead
    std::map<std::size_t, Rational> t;
    axpy(t, Rational(-1), SparseVector::from_map(combo));
    axpy(t, Rational(1), SparseVector::unit(tag));
    row.transform = SparseVector::from_map(t).scaled(inv);
  }
  rows_.emplace(lead, std::move(row));
  return true;
}

bool Echelon::contains(const SparseVector& v) const {
  std::map<std::size_t, Rational> work;
  for (const auto& e : v.entries()) work.emplace(e.index, e.value);
  return reduce(work, nullptr);
}

std::optional<SparseVector> Echelon::coordinates(const SparseVector& v) const {
  if (!track_) throw std::logic_error("Echelon::coordinates requires tracking");
  std::map<std::size_t, Rational> work;
  for (const auto& e : v.entries()) work.emplace(e.index, e.value);
  std::map<std::size_t, Rational> combo;
  if (!reduce(work, &combo)) return std::nullopt;
  return SparseVector::from_map(combo);
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, _] : rows_) out.push_back(p);
  return out;
}

RatMatrix Echelon::reduced() const {
  std::vector<std::size_t> piv = pivots();
  std::vector<std::map<std::size_t, Rational>> work;
  work.reserve(piv.size());
  for (const auto& [p, row] : rows_) {
    std::map<std::size_t, Rational> w;
    for (const auto& e : row.vec.entries()) w.emplace(e.index, e.value);
    work.push_back(std::move(w));
  }
  // Back substitution: clear each pivot column from the rows above it.
  for (std::size_t r = piv.size(); r-- > 0;) {
    const SparseVector pivot_row = SparseVector::from_map(work[r]);
    for (std::size_t s = 0; s < r; ++s) {
      auto it = work[s].find(piv[r]);
      if (it == work[s].end()) continue;
      const Rational coef = it->second;
      axpy(work[s], -coef, pivot_row);
    }
  }
  RatMatrix out(piv.size(), ambient_);
  for (std::size_t r = 0; r < piv.size(); ++r) out.set_row(r, SparseVector::from_map(work[r]));
  return out;
}

RrefResult rref(const RatMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return {e.reduced(), e.pivots(), e.rank()};
}

std::size_t rank(const RatMatrix& m) {
  Echelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::full(std::size_t ambient) { return span(RatMatrix::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DomainError("Subspace::span: vector length mismatch");
    e.insert(SparseVector::from_dense(v));
  }
  return from_echelon(e);
}

Subspace Subspace::span(const RatMatrix& rows) {
  Echelon e(rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) e.insert(rows.row(r));
  return from_echelon(e);
}

Subspace Subspace::from_echelon(const Echelon& e) {
  Subspace s(e.ambient_dim());
  s.basis_ = e.reduced();
  s.pivots_ = e.pivots();
  return s;
}

bool Subspace::contains(const SparseVector& x) const {
  if (!x.empty() && x.entries().back().index >= ambient_dim())
    throw DomainError("Subspace::contains: vector longer than ambient dimension");
  // With an RREF basis, x lies in the span iff x equals the combination
  // read off its pivot coordinates.
  std::map<std::size_t, Rational> residual;
  for (const auto& e : x.entries()) residual.emplace(e.index, e.value);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational coef = x.at(pivots_[r]);
    if (coef != 0) axpy(residual, -coef, basis_.row(r));
  }
  return residual.empty();
}

bool Subspace::contains(const Vector& x) const {
  if (x.size() != ambient_dim()) throw DomainError("Subspace::contains: length mismatch");
  return contains(SparseVector::from_dense(x));
}

Subspace kernel_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Echelon e(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::map<std::size_t, Rational> x;
    x.emplace(f, Rational(1));
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      const Rational v = r.reduced.at(row, f);
      if (v != 0) x.emplace(r.pivots[row], -v);
    }
    e.insert(SparseVector::from_map(x));
  }
  return Subspace::from_echelon(e);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("subspace_sum: ambient mismatch");
  Echelon e(a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) e.insert(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) e.insert(b.basis().row(r));
  return Subspace::from_echelon(e);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("subspace_intersect: ambient mismatch");
  const std::size_t da = a.dim();
  // Solve sum alpha_i a_i - sum beta_j b_j = 0; the alpha part spans the intersection.
  RatMatrix stacked = vstack(a.basis(), b.basis()).transpose();
  for (std::size_t r = 0; r < stacked.rows(); ++r) {
    SparseVector row;
    for (const auto& e : stacked.row(r).entries())
      row.push_back(e.index, e.index < da ? e.value : -e.value);
    stacked.set_row(r, std::move(row));
  }
  const Subspace ker = kernel_basis(stacked);
  Echelon e(a.ambient_dim());
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    std::map<std::size_t, Rational> x;
    for (const auto& ent : ker.basis().row(r).entries())
      if (ent.index < da) axpy(x, ent.value, a.basis().row(ent.index));
    e.insert(SparseVector::from_map(x));
  }
  return Subspace::from_echelon(e);
}

bool subspace_contains(const Subspace& a, const Vector& x) { return a.contains(x); }

}  // namespace graphlie
