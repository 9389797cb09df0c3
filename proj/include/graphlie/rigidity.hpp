#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphlie/cohomology.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/lie_algebra.hpp"

namespace graphlie {

/// sigma(a1,a2) = y, zero on <a1,a2> x h and h x h, where h is spanned by the
/// other basis vectors.
struct DeformationCocycle {
  std::size_t a1 = 0, a2 = 0;
  Vector y;
  AlternatingMap sigma;
};

/// Degree-1 indices a1 != a2, h closed under the bracket, y centralizing h.
/// Throws DomainError otherwise.
DeformationCocycle build_sigma(const GradedLieAlgebra& a, std::size_t a1, std::size_t a2, const Vector& y);

/// The pencil mu_t = mu + t sigma, kept symbolic in t.
struct DeformedAlgebra {
  LieAlgebra base;
  AlternatingMap sigma;

  /// mu + t sigma at a concrete t. Carries no grading.
  LieAlgebra materialize(const Rational& t) const;
};

struct DeformCheck {
  bool ok = true;
  int t_degree = 0;                     ///< 1 or 2 for the failing coefficient
  std::array<std::size_t, 3> triple{};  ///< first failing basis triple
};

/// Checks the t^1 and t^2 coefficients of the Jacobi identity of mu_t on all
/// basis triples. With Jacobi for mu this makes mu_t a Lie bracket for all t.
DeformCheck deform_check(const DeformedAlgebra& d);

/// [a1,a2] = 0, y in V_k, y outside [g1,g1] + [a1,g1] + [a2,g1] where
/// g1 = [g,g]. Requires k >= 3.
bool certify_graded_witness(const GradedLieAlgebra& a, std::size_t a1, std::size_t a2, const Vector& y);

/// For an at most 2-step algebra with v, w independent modulo the center:
/// when [v,w] = 0 and S = <[v,n] u [w,n]> is a proper subspace of the center,
/// returns the first RREF basis vector of the center outside S.
std::optional<Vector> certify_2step_witness(const LieAlgebra& a, const Vector& v, const Vector& w);

// ---------------------------------------------------------------------------
// Verdicts

struct H2NilZero {
  H2NilReport report;
};
struct CitedResult {
  std::string name;
};
struct Abelian {};
struct AbelianFactor {
  std::vector<int> isolated;  ///< 0-based vertices
};
struct GradedWitness {
  std::size_t a1 = 0, a2 = 0;  ///< vertex basis indices
  std::size_t y_index = 0;     ///< y is this basis vector
  Vector y;
  std::string y_label;
  MultiDegree y_multidegree;
};
struct TwoStepWitness {
  std::size_t v = 0, w = 0;  ///< vertex basis indices
  Vector z;
  std::string z_label;  ///< label when z is a basis vector, else empty
};

using Certificate = std::variant<H2NilZero, CitedResult, Abelian, AbelianFactor, GradedWitness, TwoStepWitness>;

enum class Verdict { Rigid, NotRigid, Unknown };

std::string to_string(Verdict v);
/// "h2_nil_zero", "cited_result", "abelian", "abelian_factor",
/// "graded_witness", "two_step_witness"
std::string certificate_tag(const Certificate& c);

struct RigidityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;
  std::optional<H2NilReport> h2;  ///< filled whenever k = 2
};

// Names used by CitedResult.
inline constexpr const char* kCitedAbelianTwo = "abelian_dim_2";
inline constexpr const char* kCitedHeisenbergPlusLine = "h1_plus_a1";
inline constexpr const char* kCitedFreeNilpotent = "free_k_step";

/// Witness search over non-adjacent vertex pairs in lexicographic order.
/// k >= 3 gives a GradedWitness (y candidates of multidegree pattern
/// (k-1,1,0,...) first), k = 2 a TwoStepWitness.
std::optional<Certificate> find_witness(const SimpleGraph& g, const GradedLieAlgebra& a, int k);

/// Decision pipeline:
///   edgeless             -> Abelian, or cited rigid when m = 2
///   isolated vertex      -> AbelianFactor, or cited rigid for K2+K1 at k = 2
///   witness found        -> NotRigid with the witness
///   k = 2 and h2_nil = 0 -> Rigid(H2NilZero)
///   complete             -> Rigid(cited free k-step)
///   otherwise            -> Unknown
/// At k = 2 a NotRigid verdict with h2_nil = 0 is a contradiction and throws
/// InvariantViolation.
RigidityVerdict classify(const SimpleGraph& g, int k);

/// Re-derives the certificate from scratch. Witnesses are re-certified and
/// their deformations re-checked.
bool verify_certificate(const SimpleGraph& g, int k, const RigidityVerdict& v);

struct SweepRow {
  SimpleGraph graph{1};
  std::string graph6;  ///< of the canonical labelling
  int m = 0;
  int k = 0;
  std::size_t dim = 0;
  RigidityVerdict verdict;
};

inline constexpr int kSweepMaxOrder = 5;
inline constexpr int kSweepMaxStep = 4;

/// Classifies every isomorphism class on 2..n_max vertices. Rows are ordered
/// by (m, canonical form). `threads` = 0 picks the hardware concurrency.
std::vector<SweepRow> sweep(int n_max, int k, unsigned threads = 0);

}  // namespace graphlie
