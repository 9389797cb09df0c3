#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "graphlie/rational.hpp"

namespace graphlie {

/// Sorted (index, value) pairs with nonzero values only.
class SparseVector {
public:
  struct Entry {
    std::size_t index;
    Rational value;
  };

  SparseVector() = default;
  static SparseVector from_dense(const Vector& v);
  /// Zero values in the map are dropped.
  static SparseVector from_map(const std::map<std::size_t, Rational>& m);
  static SparseVector unit(std::size_t i);

  Vector to_dense(std::size_t n) const;
  const std::vector<Entry>& entries() const& { return entries_; }
  /// By value on temporaries, so `for (e : f().entries())` stays valid.
  std::vector<Entry> entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Rational at(std::size_t i) const;
  /// Index must exceed every stored index; zero values are skipped.
  void push_back(std::size_t i, Rational value);
  SparseVector scaled(const Rational& s) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t t = 0; t < a.entries_.size(); ++t)
      if (a.entries_[t].index != b.entries_[t].index || a.entries_[t].value != b.entries_[t].value)
        return false;
    return true;
  }

private:
  std::vector<Entry> entries_;
};

/// acc += s * v
void axpy(std::map<std::size_t, Rational>& acc, const Rational& s, const SparseVector& v);

/// Row-sparse exact rational matrix.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return rows_.at(r); }
  void set_row(std::size_t r, SparseVector v);
  void append_row(SparseVector v);
  Rational at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  std::size_t nnz() const;
  bool is_zero() const;

  std::vector<Vector> to_dense() const;
  RatMatrix transpose() const;
  Vector apply(const Vector& x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::vector<SparseVector> rows_;
  std::size_t cols_ = 0;
};

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
/// Rows of a followed by rows of b; column counts must agree.
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

/// Incremental row echelon form over a fixed ambient dimension.
///
/// Each stored row has its pivot entry equal to 1 and zeros to the left of
/// the pivot. With tracking enabled every row also carries the combination
/// of inserted rows (by tag) it equals, which turns the echelon into a
/// coordinate solver for the span of the inserted rows.
class Echelon {
public:
  explicit Echelon(std::size_t ambient, bool track = false) : ambient_(ambient), track_(track) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v if it is independent of the current rows; returns whether it was added.
  bool insert(const SparseVector& v, std::size_t tag = 0);
  bool contains(const SparseVector& v) const;
  /// Coefficients c (by tag) with v = sum c[tag] * inserted[tag]; requires tracking.
  std::optional<SparseVector> coordinates(const SparseVector& v) const;

  std::vector<std::size_t> pivots() const;
  /// Reduced row echelon form of the span, rows ordered by pivot.
  RatMatrix reduced() const;

private:
  struct Row {
    SparseVector vec;
    SparseVector transform;
  };
  // Reduces work in increasing column order. Returns false at the first
  // nonzero column with no pivot, leaving work's leading entry there.
  bool reduce(std::map<std::size_t, Rational>& work, std::map<std::size_t, Rational>* combo) const;

  std::size_t ambient_;
  bool track_;
  std::map<std::size_t, Row> rows_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination. Zero rows are dropped from `reduced`.
RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Linear subspace of Q^ambient, stored as an RREF basis.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : basis_(0, ambient) {}
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace span(const RatMatrix& rows);
  static Subspace from_echelon(const Echelon& e);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t r) const { return basis_.row(r).to_dense(ambient_dim()); }

  bool contains(const Vector& x) const;
  bool contains(const SparseVector& x) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : M x = 0}, dimension cols(M) - rank(M).
Subspace kernel_basis(const RatMatrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vector& x);

}  // namespace graphlie
