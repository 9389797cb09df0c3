#include "graphlie/lie_algebra.hpp"

#include <algorithm>

#include "graphlie/errors.hpp"

namespace graphlie {

// ---------------------------------------------------------------------------
// AlternatingMap

AlternatingMap::AlternatingMap(std::size_t n) : n_(n), data_(n * n) {}

SparseVector AlternatingMap::value(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  return i < j ? upper(i, j) : upper(j, i).scaled(Rational(-1));
}

void AlternatingMap::set(std::size_t i, std::size_t j, const SparseVector& v) {
  if (i >= n_ || j >= n_) throw DomainError("AlternatingMap::set: index out of range");
  if (!v.empty() && v.entries().back().index >= n_)
    throw DomainError("AlternatingMap::set: value index out of range");
  if (i == j) {
    if (!v.empty()) throw DomainError("AlternatingMap::set: alternating map vanishes on (x,x)");
    return;
  }
  if (i < j)
    data_[i * n_ + j] = v;
  else
    data_[j * n_ + i] = v.scaled(Rational(-1));
}

void AlternatingMap::accumulate(std::map<std::size_t, Rational>& acc, const Rational& s,
                                std::size_t i, std::size_t j) const {
  if (i == j || s == 0) return;
  if (i < j)
    axpy(acc, s, upper(i, j));
  else
    axpy(acc, -s, upper(j, i));
}

SparseVector AlternatingMap::apply_basis_left(std::size_t i, const SparseVector& x) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& e : x.entries()) accumulate(acc, e.value, i, e.index);
  return SparseVector::from_map(acc);
}

SparseVector AlternatingMap::apply(const SparseVector& x, const SparseVector& y) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& a : x.entries())
    for (const auto& b : y.entries()) accumulate(acc, a.value * b.value, a.index, b.index);
  return SparseVector::from_map(acc);
}

Vector AlternatingMap::apply(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DomainError("bracket: vector length mismatch");
  return apply(SparseVector::from_dense(x), SparseVector::from_dense(y)).to_dense(n_);
}

bool AlternatingMap::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& v) { return v.empty(); });
}

AlternatingMap AlternatingMap::plus_scaled(const Rational& t, const AlternatingMap& other) const {
  if (other.n_ != n_) throw DomainError("AlternatingMap::plus_scaled: dimension mismatch");
  AlternatingMap out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (upper(i, j).empty() && other.upper(i, j).empty()) continue;
      std::map<std::size_t, Rational> acc;
      axpy(acc, Rational(1), upper(i, j));
      axpy(acc, t, other.upper(i, j));
      out.data_[i * n_ + j] = SparseVector::from_map(acc);
    }
  return out;
}

// ---------------------------------------------------------------------------
// GradedLieAlgebra

GradedLieAlgebra::GradedLieAlgebra(LieAlgebra algebra, int k, std::vector<BasisLabel> labels)
    : algebra_(std::move(algebra)), k_(k), labels_(std::move(labels)) {
  if (k_ < 1) throw DomainError("graded algebra needs k >= 1");
  if (labels_.size() != algebra_.dim()) throw DomainError("graded algebra: one label per basis vector");
  for (const auto& l : labels_)
    if (l.degree < 1 || l.degree > k_) throw DomainError("graded algebra: degree outside 1..k");
}

std::vector<std::size_t> GradedLieAlgebra::grading() const {
  std::vector<std::size_t> dims(static_cast<std::size_t>(k_), 0);
  for (const auto& l : labels_) ++dims[static_cast<std::size_t>(l.degree - 1)];
  return dims;
}

std::vector<std::size_t> GradedLieAlgebra::indices_of_degree(int j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i].degree == j) out.push_back(i);
  return out;
}

bool GradedLieAlgebra::has_multidegrees() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const BasisLabel& l) { return !l.multidegree.empty(); });
}

std::string GradedLieAlgebra::label_string(std::size_t i) const {
  const auto& l = labels_.at(i);
  return l.word ? l.word->to_string() : "e" + std::to_string(i + 1);
}

// ---------------------------------------------------------------------------
// Operations

Vector bracket_vectors(const LieAlgebra& a, const Vector& x, const Vector& y) {
  return a.bracket().apply(x, y);
}

Subspace bracket_subspaces(const LieAlgebra& a, const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != a.dim() || t.ambient_dim() != a.dim())
    throw DomainError("bracket_subspaces: ambient dimension mismatch");
  Echelon e(a.dim());
  for (std::size_t p = 0; p < s.dim(); ++p)
    for (std::size_t q = 0; q < t.dim(); ++q) {
      SparseVector v = a.bracket().apply(s.basis().row(p), t.basis().row(q));
      if (!v.empty()) e.insert(v);
    }
  return Subspace::from_echelon(e);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  const Subspace whole = Subspace::full(a.dim());
  std::vector<Subspace> series{whole};
  while (series.back().dim() > 0) {
    Subspace next = bracket_subspaces(a, whole, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& a) {
  std::vector<std::size_t> dims;
  for (const auto& s : lower_central_series(a)) dims.push_back(s.dim());
  return dims;
}

std::optional<int> nilpotency_step(const LieAlgebra& a) {
  const auto series = lower_central_series(a);
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

Subspace center(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  // x is central iff sum_a x_a [e_a, e_b] = 0 for every b; rows indexed by (b, d).
  std::map<std::size_t, std::map<std::size_t, Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      if (!a.bracket().nonzero(i, b)) continue;
      for (const auto& e : a.bracket().value(i, b).entries()) rows[b * n + e.index][i] += e.value;
    }
  RatMatrix m(0, n);
  for (const auto& [_, r] : rows) m.append_row(SparseVector::from_map(r));
  return kernel_basis(m);
}

GradedLieAlgebra associated_graded(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  const auto series = lower_central_series(a);
  if (series.back().dim() != 0) throw DomainError("associated_graded: algebra is not nilpotent");
  const std::size_t levels = series.size() - 1;

  std::vector<SparseVector> basis;
  std::vector<int> level_of;
  for (std::size_t lev = 0; lev < levels; ++lev) {
    Echelon e(n);
    const Subspace& lower = series[lev + 1];
    for (std::size_t r = 0; r < lower.dim(); ++r) e.insert(lower.basis().row(r));
    const std::size_t target = series[lev].dim();
    for (std::size_t j = 0; j < n && e.rank() < target; ++j) {
      const SparseVector u = SparseVector::unit(j);
      if (series[lev].contains(u) && e.insert(u)) {
        basis.push_back(u);
        level_of.push_back(static_cast<int>(lev));
      }
    }
    for (std::size_t r = 0; r < series[lev].dim() && e.rank() < target; ++r)
      if (e.insert(series[lev].basis().row(r))) {
        basis.push_back(series[lev].basis().row(r));
        level_of.push_back(static_cast<int>(lev));
      }
  }
  if (basis.size() != n) throw InvariantViolation("associated_graded: adapted basis incomplete");

  Echelon solver(n, /*track=*/true);
  for (std::size_t p = 0; p < n; ++p) solver.insert(basis[p], p);

  AlternatingMap gr(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const int target_level = level_of[p] + level_of[q] + 1;
      if (target_level >= static_cast<int>(levels)) continue;
      const SparseVector v = a.bracket().apply(basis[p], basis[q]);
      if (v.empty()) continue;
      auto coords = solver.coordinates(v);
      if (!coords) throw InvariantViolation("associated_graded: bracket outside the algebra");
      SparseVector projected;
      for (const auto& e : coords->entries())
        if (level_of[e.index] == target_level) projected.push_back(e.index, e.value);
      gr.set(p, q, projected);
    }
  std::vector<BasisLabel> labels(n);
  for (std::size_t p = 0; p < n; ++p) labels[p].degree = level_of[p] + 1;
  return GradedLieAlgebra(LieAlgebra(std::move(gr)), std::max<int>(1, static_cast<int>(levels)),
                          std::move(labels));
}

std::vector<JacobiViolation> jacobi_report(const LieAlgebra& a, std::size_t max_reports) {
  const auto& mu = a.bracket();
  const std::size_t n = a.dim();
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        const bool ij = mu.nonzero(i, j);
        const bool jl = mu.nonzero(j, l);
        const bool il = mu.nonzero(i, l);
        if (!ij && !jl && !il) continue;
        // [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]]
        std::map<std::size_t, Rational> acc;
        for (const auto& e : mu.upper(j, l).entries()) mu.accumulate(acc, e.value, i, e.index);
        for (const auto& e : mu.upper(i, l).entries()) mu.accumulate(acc, -e.value, j, e.index);
        for (const auto& e : mu.upper(i, j).entries()) mu.accumulate(acc, e.value, l, e.index);
        if (!acc.empty()) {
          out.push_back({i, j, l, SparseVector::from_map(acc)});
          if (out.size() >= max_reports) return out;
        }
      }
  return out;
}

bool grading_support_check(const GradedLieAlgebra& a) {
  if (!a.has_multidegrees()) throw DomainError("grading_support_check: multidegree labels missing");
  const auto& mu = a.algebra().bracket();
  const auto& labels = a.labels();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      for (const auto& e : mu.upper(i, j).entries()) {
        if (labels[e.index].degree != labels[i].degree + labels[j].degree) return false;
        if (labels[e.index].multidegree != labels[i].multidegree + labels[j].multidegree) return false;
      }
  return true;
}

LieAlgebra permute_basis(const LieAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t n = a.dim();
  if (perm.size() != n) throw DomainError("permute_basis: permutation size mismatch");
  AlternatingMap out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& v = a.bracket().upper(i, j);
      if (v.empty()) continue;
      std::map<std::size_t, Rational> m;
      for (const auto& e : v.entries()) m[perm[e.index]] = e.value;
      out.set(perm[i], perm[j], SparseVector::from_map(m));
    }
  return LieAlgebra(std::move(out));
}

}  // namespace graphlie
