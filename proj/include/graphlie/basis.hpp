#pragma once

#include <cstddef>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/lie_algebra.hpp"
#include "graphlie/words.hpp"

namespace graphlie {

struct BasisElement {
  Word lyndon;
  BracketWord word;
  MultiDegree multidegree;
  TraceExpansion expansion;  ///< image in the truncated trace algebra
  int degree() const { return word.degree(); }
};

/// Basis of g(k,G) built degree by degree inside the free partially
/// commutative associative algebra on the vertices, truncated at degree k.
///
/// Candidates are standard-bracketed Lyndon words in lexicographic order; a
/// candidate is kept when its trace expansion is independent of those already
/// kept in its multidegree block. Elements of different multidegrees have
/// disjoint word supports, so independence is only ever tested per block.
struct GradedBasis {
  int m = 0;
  int k = 0;
  std::vector<std::vector<BasisElement>> by_degree;  ///< index j-1 holds V_j

  std::vector<std::size_t> dims() const;
  std::size_t size() const;
  /// Flattened in degree order, then selection order.
  std::vector<const BasisElement*> flat() const;
};

GradedBasis graded_basis(const SimpleGraph& g, int k);

/// g(k,G) with exact structure constants over graded_basis(g, k). Each
/// bracket is expanded in trace coordinates and solved against the basis
/// expansions of the matching multidegree block.
GradedLieAlgebra structure_constants(const SimpleGraph& g, int k);
GradedLieAlgebra structure_constants(const SimpleGraph& g, const GradedBasis& basis);

/// Degree dimensions l_1..l_k of g(k,G) from the clique polynomial of the
/// complement: with e_i the number of i-cliques of the complement, the power
/// sums p_n of 1/C(-t) come from Newton's identities and
/// l_n = (1/n) sum_{d|n} mobius(n/d) p_d.
std::vector<std::size_t> dimension_oracle(const SimpleGraph& g, int k);

/// Number of cliques of each size 0..m in g (the empty clique included).
std::vector<std::size_t> clique_counts(const SimpleGraph& g);

int mobius(int n);

}  // namespace graphlie
