#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphlie/linalg.hpp"
#include "graphlie/words.hpp"

namespace graphlie {

/// Alternating bilinear map V x V -> V on V = Q^n, stored on basis pairs i<j.
/// Used both for Lie brackets and for 2-cochains.
class AlternatingMap {
public:
  explicit AlternatingMap(std::size_t n = 0);

  std::size_t dim() const { return n_; }

  /// Value on (e_i, e_j) for i < j.
  const SparseVector& upper(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Value on (e_i, e_j) for any i, j, with the alternating sign applied.
  SparseVector value(std::size_t i, std::size_t j) const;
  /// Sets the value on (e_i, e_j); (e_j, e_i) gets the negative.
  void set(std::size_t i, std::size_t j, const SparseVector& v);
  bool nonzero(std::size_t i, std::size_t j) const {
    return i != j && !data_[i < j ? i * n_ + j : j * n_ + i].empty();
  }

  /// acc += s * map(e_i, e_j)
  void accumulate(std::map<std::size_t, Rational>& acc, const Rational& s, std::size_t i,
                  std::size_t j) const;
  /// map(e_i, x) for sparse x.
  SparseVector apply_basis_left(std::size_t i, const SparseVector& x) const;
  SparseVector apply(const SparseVector& x, const SparseVector& y) const;
  Vector apply(const Vector& x, const Vector& y) const;

  bool is_zero() const;
  /// this + t * other
  AlternatingMap plus_scaled(const Rational& t, const AlternatingMap& other) const;

  friend bool operator==(const AlternatingMap&, const AlternatingMap&) = default;

private:
  std::size_t n_;
  std::vector<SparseVector> data_;
};

/// Finite-dimensional Lie algebra given by structure constants in a fixed basis.
class LieAlgebra {
public:
  explicit LieAlgebra(AlternatingMap bracket) : bracket_(std::move(bracket)) {}
  static LieAlgebra abelian(std::size_t n) { return LieAlgebra(AlternatingMap(n)); }

  std::size_t dim() const { return bracket_.dim(); }
  const AlternatingMap& bracket() const { return bracket_; }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  AlternatingMap bracket_;
};

struct BasisLabel {
  int degree = 1;
  std::optional<BracketWord> word;
  MultiDegree multidegree;  ///< empty when unknown
};

/// Lie algebra with a grading V_1 + ... + V_k ([V_i,V_j] in V_{i+j}) carried
/// as a degree per basis vector, plus optional bracket-word and multidegree labels.
class GradedLieAlgebra {
public:
  GradedLieAlgebra(LieAlgebra algebra, int k, std::vector<BasisLabel> labels);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  int step_bound() const { return k_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  int degree(std::size_t i) const { return labels_[i].degree; }
  /// d_1..d_k
  std::vector<std::size_t> grading() const;
  std::vector<std::size_t> indices_of_degree(int j) const;
  bool has_multidegrees() const;
  std::string label_string(std::size_t i) const;

private:
  LieAlgebra algebra_;
  int k_;
  std::vector<BasisLabel> labels_;
};

Vector bracket_vectors(const LieAlgebra& a, const Vector& x, const Vector& y);
Subspace bracket_subspaces(const LieAlgebra& a, const Subspace& s, const Subspace& t);

/// g^0 = g, g^{i+1} = [g, g^i], up to and including the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& a);
std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& a);
/// Smallest s with g^s = 0, or nullopt when the series stabilizes above 0.
std::optional<int> nilpotency_step(const LieAlgebra& a);

Subspace center(const LieAlgebra& a);

/// Associated graded algebra for the lower central series, in a basis
/// adapted to the series: each g^i/g^{i+1} is represented by original basis
/// vectors first (index order), then by RREF basis rows of g^i.
GradedLieAlgebra associated_graded(const LieAlgebra& a);

struct JacobiViolation {
  std::size_t i, j, l;
  SparseVector value;
};

/// Triples i<j<l where the cyclic Jacobi sum is nonzero; empty iff Jacobi holds.
std::vector<JacobiViolation> jacobi_report(const LieAlgebra& a, std::size_t max_reports = 16);

/// Every nonzero c_{ij}^l satisfies deg l = deg i + deg j and, for labelled
/// algebras, d(l) = d(i) + d(j). Throws DomainError when labels are missing.
bool grading_support_check(const GradedLieAlgebra& a);

/// Same algebra with basis vector i renamed perm[i].
LieAlgebra permute_basis(const LieAlgebra& a, const std::vector<std::size_t>& perm);

}  // namespace graphlie
