#include "graphlie/rigidity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "graphlie/basis.hpp"
#include "graphlie/errors.hpp"

namespace graphlie {

// ---------------------------------------------------------------------------
// Deformations

DeformationCocycle build_sigma(const GradedLieAlgebra& a, std::size_t a1, std::size_t a2, const Vector& y) {
  const std::size_t n = a.dim();
  if (a1 >= n || a2 >= n) throw DomainError("build_sigma: index out of range");
  if (a1 == a2) throw DomainError("build_sigma: a1 and a2 must differ");
  if (a.degree(a1) != 1 || a.degree(a2) != 1) throw DomainError("build_sigma: a1, a2 must have degree 1");
  if (y.size() != n) throw DomainError("build_sigma: y has the wrong length");

  const auto& mu = a.algebra().bracket();
  auto in_h = [&](std::size_t i) { return i != a1 && i != a2; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_h(i)) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!in_h(j)) continue;
      for (const auto& e : mu.upper(i, j).entries())
        if (!in_h(e.index)) throw DomainError("build_sigma: complement of <a1,a2> is not a subalgebra");
    }
  }
  const SparseVector ys = SparseVector::from_dense(y);
  for (std::size_t b = 0; b < n; ++b)
    if (in_h(b) && !mu.apply_basis_left(b, ys).empty())
      throw DomainError("build_sigma: y does not centralize the complement of <a1,a2>");

  DeformationCocycle c{a1, a2, y, AlternatingMap(n)};
  c.sigma.set(a1, a2, ys);
  return c;
}

LieAlgebra DeformedAlgebra::materialize(const Rational& t) const {
  return LieAlgebra(base.bracket().plus_scaled(t, sigma));
}

DeformCheck deform_check(const DeformedAlgebra& d) {
  const auto& mu = d.base.bracket();
  const auto& s = d.sigma;
  const std::size_t n = mu.dim();
  if (s.dim() != n) throw DomainError("deform_check: dimension mismatch");

  std::vector<char> s_touches(n, 0);  // s(e_i, .) != 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.nonzero(i, j)) s_touches[i] = s_touches[j] = 1;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const std::array<std::array<std::size_t, 3>, 3> cyc{{{x, y, z}, {y, z, x}, {z, x, y}}};
        bool first = false, second = false;
        for (const auto& [p, q, r] : cyc) {
          const bool spq = s.nonzero(p, q);
          first = first || spq || (mu.nonzero(p, q) && s_touches[r]);
          second = second || (spq && s_touches[r]);
        }
        if (first) {
          std::map<std::size_t, Rational> acc;
          for (const auto& [p, q, r] : cyc) {
            for (const auto& e : s.value(p, q).entries()) mu.accumulate(acc, e.value, e.index, r);
            for (const auto& e : mu.value(p, q).entries()) s.accumulate(acc, e.value, e.index, r);
          }
          if (!acc.empty()) return {false, 1, {x, y, z}};
        }
        if (second) {
          std::map<std::size_t, Rational> acc;
          for (const auto& [p, q, r] : cyc)
            for (const auto& e : s.value(p, q).entries()) s.accumulate(acc, e.value, e.index, r);
          if (!acc.empty()) return {false, 2, {x, y, z}};
        }
      }
  return {};
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

Subspace bracket_with(const LieAlgebra& a, std::size_t i, const Subspace& s) {
  Echelon e(a.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const SparseVector v = a.bracket().apply_basis_left(i, s.basis().row(r));
    if (!v.empty()) e.insert(v);
  }
  return Subspace::from_echelon(e);
}

/// Subspaces shared by every graded witness test on one algebra.
class GradedContext {
public:
  explicit GradedContext(const GradedLieAlgebra& a) : a_(a) {
    const Subspace whole = Subspace::full(a.dim());
    g1_ = bracket_subspaces(a.algebra(), whole, whole);
    g1g1_ = bracket_subspaces(a.algebra(), g1_, g1_);
  }

  /// [g1,g1] + [a1,g1] + [a2,g1]
  Echelon obstruction(std::size_t a1, std::size_t a2) {
    Echelon e(a_.dim());
    const std::array<const Subspace*, 3> parts{&g1g1_, &with(a1), &with(a2)};
    for (const Subspace* s : parts)
      for (std::size_t r = 0; r < s->dim(); ++r) e.insert(s->basis().row(r));
    return e;
  }

private:
  const Subspace& with(std::size_t i) {
    auto it = cache_.find(i);
    if (it == cache_.end()) it = cache_.emplace(i, bracket_with(a_.algebra(), i, g1_)).first;
    return it->second;
  }

  const GradedLieAlgebra& a_;
  Subspace g1_, g1g1_;
  std::map<std::size_t, Subspace> cache_;
};

bool in_top_degree(const GradedLieAlgebra& a, const Vector& y) {
  bool nonzero = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    nonzero = true;
    if (a.degree(i) != a.step_bound()) return false;
  }
  return nonzero;
}

std::optional<Vector> two_step_witness(const LieAlgebra& a, const Subspace& z, std::size_t v_dim,
                                       const SparseVector& v, const SparseVector& w) {
  const auto& mu = a.bracket();
  if (!mu.apply(v, w).empty()) return std::nullopt;
  Echelon s(v_dim);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (const SparseVector* x : {&v, &w}) {
      SparseVector b = mu.apply(*x, SparseVector::unit(i));
      if (!b.empty()) s.insert(b);
    }
  }
  if (s.rank() >= z.dim()) return std::nullopt;
  for (std::size_t r = 0; r < z.dim(); ++r)
    if (!s.contains(z.basis().row(r))) return z.basis_vector(r);
  throw InvariantViolation("two-step witness: bracket span is larger than the center");
}

bool independent_mod(const Subspace& z, const SparseVector& v, const SparseVector& w) {
  Echelon e(z.ambient_dim());
  for (std::size_t r = 0; r < z.dim(); ++r) e.insert(z.basis().row(r));
  return e.insert(v) && e.insert(w);
}

void require_two_step(const LieAlgebra& a) {
  const auto step = nilpotency_step(a);
  if (!step || *step > 2) throw DomainError("two-step witness: algebra is not at most 2-step nilpotent");
}

bool pattern_k_minus_1_1(const MultiDegree& md, int k) {
  MultiDegree s = md;
  std::sort(s.begin(), s.end(), std::greater<>());
  if (s.size() < 2 || s[0] != k - 1 || s[1] != 1) return false;
  return std::all_of(s.begin() + 2, s.end(), [](int x) { return x == 0; });
}

std::string unit_label(const GradedLieAlgebra& a, const Vector& z) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    if (at || z[i] != 1) return {};
    at = i;
  }
  return at ? a.label_string(*at) : std::string{};
}

}  // namespace

bool certify_graded_witness(const GradedLieAlgebra& a, std::size_t a1, std::size_t a2, const Vector& y) {
  if (a.step_bound() < 3) throw DomainError("certify_graded_witness: needs k >= 3");
  const std::size_t n = a.dim();
  if (a1 >= n || a2 >= n || y.size() != n) throw DomainError("certify_graded_witness: index or length mismatch");
  if (a1 == a2 || a.degree(a1) != 1 || a.degree(a2) != 1) return false;
  if (a.algebra().bracket().nonzero(a1, a2)) return false;
  if (!in_top_degree(a, y)) return false;
  GradedContext ctx(a);
  return !ctx.obstruction(a1, a2).contains(SparseVector::from_dense(y));
}

std::optional<Vector> certify_2step_witness(const LieAlgebra& a, const Vector& v, const Vector& w) {
  require_two_step(a);
  if (v.size() != a.dim() || w.size() != a.dim()) throw DomainError("certify_2step_witness: length mismatch");
  const Subspace z = center(a);
  const SparseVector vs = SparseVector::from_dense(v), ws = SparseVector::from_dense(w);
  if (!independent_mod(z, vs, ws)) throw DomainError("certify_2step_witness: v, w dependent modulo the center");
  return two_step_witness(a, z, a.dim(), vs, ws);
}

std::optional<Certificate> find_witness(const SimpleGraph& g, const GradedLieAlgebra& a, int k) {
  const int m = g.order();
  const auto v1 = a.indices_of_degree(1);
  if (static_cast<int>(v1.size()) != m) throw DomainError("find_witness: degree-1 part does not match the graph");

  if (k >= 3) {
    std::vector<std::size_t> ys = a.indices_of_degree(k);
    if (a.has_multidegrees())
      std::stable_partition(ys.begin(), ys.end(),
                            [&](std::size_t i) { return pattern_k_minus_1_1(a.labels()[i].multidegree, k); });
    if (ys.empty()) return std::nullopt;
    GradedContext ctx(a);
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        if (!g.commute(p, q)) continue;
        const std::size_t a1 = v1[static_cast<std::size_t>(p)], a2 = v1[static_cast<std::size_t>(q)];
        const Echelon obstruction = ctx.obstruction(a1, a2);
        for (std::size_t y : ys)
          if (!obstruction.contains(SparseVector::unit(y))) {
            const auto& lab = a.labels()[y];
            return GradedWitness{a1, a2, y, unit_vector(a.dim(), y), a.label_string(y), lab.multidegree};
          }
      }
    return std::nullopt;
  }

  if (k != 2) throw DomainError("find_witness: k must be at least 2");
  const LieAlgebra& alg = a.algebra();
  require_two_step(alg);
  const Subspace z = center(alg);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      if (!g.commute(p, q)) continue;
      const std::size_t v = v1[static_cast<std::size_t>(p)], w = v1[static_cast<std::size_t>(q)];
      const SparseVector vs = SparseVector::unit(v), ws = SparseVector::unit(w);
      if (!independent_mod(z, vs, ws)) continue;
      if (auto zv = two_step_witness(alg, z, alg.dim(), vs, ws)) return TwoStepWitness{v, w, *zv, unit_label(a, *zv)};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Rigid: return "rigid";
    case Verdict::NotRigid: return "not_rigid";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string certificate_tag(const Certificate& c) {
  struct Tag {
    std::string operator()(const H2NilZero&) const { return "h2_nil_zero"; }
    std::string operator()(const CitedResult&) const { return "cited_result"; }
    std::string operator()(const Abelian&) const { return "abelian"; }
    std::string operator()(const AbelianFactor&) const { return "abelian_factor"; }
    std::string operator()(const GradedWitness&) const { return "graded_witness"; }
    std::string operator()(const TwoStepWitness&) const { return "two_step_witness"; }
  };
  return std::visit(Tag{}, c);
}

namespace {

bool is_k2_plus_k1(const SimpleGraph& g) { return g.order() == 3 && g.edge_count() == 1; }

RigidityVerdict make(Verdict v, Certificate c) { return {v, std::move(c), std::nullopt}; }

RigidityVerdict classify_impl(const SimpleGraph& g, int k, const GradedLieAlgebra* alg) {
  const int m = g.order();
  const GraphAnalysis an = analyze(g);
  if (g.edge_count() == 0)
    return m == 2 ? make(Verdict::Rigid, CitedResult{kCitedAbelianTwo}) : make(Verdict::NotRigid, Abelian{});
  if (!an.isolated.empty()) {
    if (k == 2 && is_k2_plus_k1(g)) return make(Verdict::Rigid, CitedResult{kCitedHeisenbergPlusLine});
    return make(Verdict::NotRigid, AbelianFactor{an.isolated});
  }
  if (auto w = find_witness(g, *alg, k)) return make(Verdict::NotRigid, std::move(*w));
  if (k == 2) {
    H2NilReport h2 = h2_nil(*alg);
    if (h2.h2_dim == 0) return make(Verdict::Rigid, H2NilZero{h2});
  }
  if (an.complete) return make(Verdict::Rigid, CitedResult{kCitedFreeNilpotent});
  return {};
}

}  // namespace

RigidityVerdict classify(const SimpleGraph& g, int k) {
  if (g.order() < 2) throw DomainError("classify: graph needs at least 2 vertices");
  if (k < 2) throw DomainError("classify: k must be at least 2");
  const GradedLieAlgebra alg = structure_constants(g, k);
  RigidityVerdict v = classify_impl(g, k, &alg);
  if (k == 2) {
    v.h2 = h2_nil(alg);
    if (v.verdict == Verdict::NotRigid && v.h2->h2_dim == 0)
      throw InvariantViolation("classify: non-rigidity certificate " + certificate_tag(*v.certificate) +
                               " contradicts H2_nil = 0 for " + to_graph6(g));
  }
  return v;
}

bool verify_certificate(const SimpleGraph& g, int k, const RigidityVerdict& v) {
  if (!v.certificate) return v.verdict == Verdict::Unknown;
  const Certificate& c = *v.certificate;
  const bool rigid_tag = std::holds_alternative<H2NilZero>(c) || std::holds_alternative<CitedResult>(c);
  if (v.verdict != (rigid_tag ? Verdict::Rigid : Verdict::NotRigid)) return false;

  const int m = g.order();
  const GraphAnalysis an = analyze(g);
  if (const auto* cr = std::get_if<CitedResult>(&c)) {
    if (cr->name == kCitedAbelianTwo) return m == 2 && g.edge_count() == 0;
    if (cr->name == kCitedHeisenbergPlusLine) return k == 2 && is_k2_plus_k1(g);
    if (cr->name == kCitedFreeNilpotent) return an.complete && m >= 2;
    return false;
  }
  if (std::holds_alternative<Abelian>(c)) return g.edge_count() == 0 && m != 2;
  if (const auto* af = std::get_if<AbelianFactor>(&c))
    return !an.isolated.empty() && af->isolated == an.isolated && !(k == 2 && is_k2_plus_k1(g));

  const GradedLieAlgebra alg = structure_constants(g, k);
  if (std::holds_alternative<H2NilZero>(c)) return k == 2 && h2_nil(alg).h2_dim == 0;

  std::size_t a1 = 0, a2 = 0;
  Vector y;
  if (const auto* gw = std::get_if<GradedWitness>(&c)) {
    if (k < 3 || !certify_graded_witness(alg, gw->a1, gw->a2, gw->y)) return false;
    a1 = gw->a1, a2 = gw->a2, y = gw->y;
  } else {
    const auto& tw = std::get<TwoStepWitness>(c);
    if (k != 2 || tw.v >= alg.dim() || tw.w >= alg.dim() || tw.z.size() != alg.dim()) return false;
    const auto& mu = alg.algebra().bracket();
    const Subspace z = center(alg.algebra());
    const SparseVector vs = SparseVector::unit(tw.v), ws = SparseVector::unit(tw.w);
    if (mu.nonzero(tw.v, tw.w) || !independent_mod(z, vs, ws) || !z.contains(tw.z)) return false;
    Echelon s(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (const SparseVector* x : {&vs, &ws}) {
        SparseVector b = mu.apply(*x, SparseVector::unit(i));
        if (!b.empty()) s.insert(b);
      }
    if (s.contains(SparseVector::from_dense(tw.z))) return false;
    a1 = tw.v, a2 = tw.w, y = tw.z;
  }
  const DeformationCocycle cocycle = build_sigma(alg, a1, a2, y);
  const DeformedAlgebra d{alg.algebra(), cocycle.sigma};
  if (!deform_check(d).ok) return false;
  return lower_central_series_dims(d.materialize(Rational(1))) == lower_central_series_dims(alg.algebra());
}

std::vector<SweepRow> sweep(int n_max, int k, unsigned threads) {
  if (n_max < 2 || n_max > kSweepMaxOrder)
    throw DomainError("sweep: n_max must be in 2.." + std::to_string(kSweepMaxOrder));
  if (k < 2 || k > kSweepMaxStep) throw DomainError("sweep: k must be in 2.." + std::to_string(kSweepMaxStep));

  std::vector<SweepRow> rows;
  for (int m = 2; m <= n_max; ++m)
    for (const auto& g : enumerate_graphs(m)) {
      SweepRow r;
      r.graph = g;
      r.graph6 = to_graph6(g);
      r.m = m;
      r.k = k;
      const auto dims = dimension_oracle(g, k);
      r.dim = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
      rows.push_back(std::move(r));
    }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].verdict = classify(rows[i].graph, k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = rows.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace graphlie
