#include "graphlie/basis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "graphlie/errors.hpp"

namespace graphlie {

std::vector<std::size_t> GradedBasis::dims() const {
  std::vector<std::size_t> d;
  for (const auto& level : by_degree) d.push_back(level.size());
  return d;
}

std::size_t GradedBasis::size() const {
  std::size_t n = 0;
  for (const auto& level : by_degree) n += level.size();
  return n;
}

std::vector<const BasisElement*> GradedBasis::flat() const {
  std::vector<const BasisElement*> out;
  for (const auto& level : by_degree)
    for (const auto& e : level) out.push_back(&e);
  return out;
}

namespace {

/// Coordinates for one multidegree block of the trace algebra: the distinct
/// normal forms of all rearrangements of the block's letters.
class TraceBlock {
public:
  TraceBlock(const MultiDegree& md, const SimpleGraph& g) : solver_(0) {
    Word letters;
    for (std::size_t v = 0; v < md.size(); ++v) letters.insert(letters.end(), static_cast<std::size_t>(md[v]), static_cast<int>(v));
    std::set<Word> forms;
    do {
      forms.insert(trace_normal_form(letters, g));
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::size_t c = 0;
    for (const auto& w : forms) columns_.emplace(w, c++);
    solver_ = Echelon(columns_.size(), /*track=*/true);
  }

  SparseVector coordinates_of(const TraceExpansion& x) const {
    std::map<std::size_t, Rational> m;
    for (const auto& [w, c] : x) {
      auto it = columns_.find(w);
      if (it == columns_.end()) throw InvariantViolation("trace word outside its multidegree block");
      m.emplace(it->second, c);
    }
    return SparseVector::from_map(m);
  }

  Echelon& solver() { return solver_; }
  const Echelon& solver() const { return solver_; }

private:
  std::map<Word, std::size_t> columns_;
  Echelon solver_;
};

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

GradedBasis graded_basis(const SimpleGraph& g, int k) {
  if (k < 1) throw DomainError("graded_basis: k must be at least 1");
  const int m = g.order();
  GradedBasis out;
  out.m = m;
  out.k = k;
  out.by_degree.resize(static_cast<std::size_t>(k));

  std::map<MultiDegree, TraceBlock> blocks;
  std::vector<std::vector<Word>> by_length(static_cast<std::size_t>(k));
  for (auto& w : lyndon_words(m, k)) by_length[w.size() - 1].push_back(std::move(w));

  for (int j = 1; j <= k; ++j) {
    for (const Word& w : by_length[static_cast<std::size_t>(j - 1)]) {
      BasisElement e{w, standard_bracketing(w), multidegree_of(w, m), {}};
      e.expansion = expand_bracket_word(e.word, g, k);
      if (e.expansion.empty()) continue;
      auto it = blocks.try_emplace(e.multidegree, e.multidegree, g).first;
      if (it->second.solver().insert(it->second.coordinates_of(e.expansion)))
        out.by_degree[static_cast<std::size_t>(j - 1)].push_back(std::move(e));
    }
  }

  const auto expected = dimension_oracle(g, k);
  if (out.dims() != expected)
    throw InvariantViolation("graded_basis: dimensions " + dims_string(out.dims()) +
                             " disagree with the clique-polynomial oracle " + dims_string(expected));
  return out;
}

GradedLieAlgebra structure_constants(const SimpleGraph& g, int k) {
  return structure_constants(g, graded_basis(g, k));
}

GradedLieAlgebra structure_constants(const SimpleGraph& g, const GradedBasis& basis) {
  const auto elems = basis.flat();
  const std::size_t n = elems.size();
  const int k = basis.k;

  std::map<MultiDegree, TraceBlock> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = blocks.try_emplace(elems[i]->multidegree, elems[i]->multidegree, g).first;
    if (!it->second.solver().insert(it->second.coordinates_of(elems[i]->expansion), i))
      throw InvariantViolation("structure_constants: basis expansions are dependent");
  }

  AlternatingMap mu(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (elems[i]->degree() + elems[j]->degree() > k) continue;
      const TraceExpansion comm = trace_commutator(elems[i]->expansion, elems[j]->expansion, g, k);
      if (comm.empty()) continue;
      const MultiDegree md = elems[i]->multidegree + elems[j]->multidegree;
      auto it = blocks.find(md);
      if (it == blocks.end())
        throw InvariantViolation("structure_constants: bracket lands in an empty multidegree block");
      auto coords = it->second.solver().coordinates(it->second.coordinates_of(comm));
      if (!coords)
        throw InvariantViolation("structure_constants: bracket of " + elems[i]->word.to_string() +
                                 " and " + elems[j]->word.to_string() + " is outside the basis span");
      mu.set(i, j, *coords);
    }

  std::vector<BasisLabel> labels;
  labels.reserve(n);
  for (const auto* e : elems) labels.push_back({e->degree(), e->word, e->multidegree});
  return GradedLieAlgebra(LieAlgebra(std::move(mu)), k, std::move(labels));
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

void count_cliques(const SimpleGraph& g, std::uint64_t candidates, std::size_t size,
                   std::vector<std::size_t>& counts) {
  ++counts[size];
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Extend only by larger vertices so each clique is counted once.
    count_cliques(g, candidates & g.neighbours(v), size + 1, counts);
  }
}

}  // namespace

std::vector<std::size_t> clique_counts(const SimpleGraph& g) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(g.order()) + 1, 0);
  const std::uint64_t all =
      g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  count_cliques(g, all, 0, counts);
  return counts;
}

int mobius(int n) {
  if (n < 1) throw DomainError("mobius: n must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<std::size_t> dimension_oracle(const SimpleGraph& g, int k) {
  if (k < 1) throw DomainError("dimension_oracle: k must be at least 1");
  const auto cliques = clique_counts(complement(g));
  auto e = [&](int i) -> Integer {
    return i < static_cast<int>(cliques.size()) ? Integer(cliques[static_cast<std::size_t>(i)]) : Integer(0);
  };
  // Newton's identities for the power sums of the roots of C(-t) = prod(1 - a_i t).
  std::vector<Integer> p(static_cast<std::size_t>(k) + 1);
  for (int n = 1; n <= k; ++n) {
    Integer s = (n % 2 == 1 ? 1 : -1) * n * e(n);
    for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 1 : -1) * e(i) * p[static_cast<std::size_t>(n - i)];
    p[static_cast<std::size_t>(n)] = s;
  }
  std::vector<std::size_t> dims;
  for (int n = 1; n <= k; ++n) {
    Integer s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += mobius(n / d) * p[static_cast<std::size_t>(d)];
    if (s % n != 0 || s < 0) throw InvariantViolation("dimension_oracle: non-integral dimension");
    dims.push_back(static_cast<std::size_t>(Integer(s / n)));
  }
  return dims;
}

}  // namespace graphlie
