#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphlie {

/// Simple undirected graph on vertices 0..m-1. The vertex order is the
/// alphabet order used for Lyndon words, so it is never changed silently.
///
/// Adjacency is kept as one bitmask per vertex, which caps m at 64; sweeps
/// and canonical forms only run at much smaller sizes anyway.
class SimpleGraph {
public:
  static constexpr int kMaxVertices = 64;

  explicit SimpleGraph(int m);
  SimpleGraph(int m, const std::vector<std::pair<int, int>>& edges);

  int order() const { return m_; }
  bool adjacent(int i, int j) const { return i != j && ((adj_[i] >> j) & 1u); }
  /// Distinct non-adjacent letters commute in the trace monoid of the graph.
  bool commute(int i, int j) const { return i != j && !adjacent(i, j); }
  std::uint64_t neighbours(int i) const { return adj_[i]; }
  int degree(int i) const;
  std::size_t edge_count() const;
  /// Edges (i<j) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int i, int j);

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
  int m_;
  std::vector<std::uint64_t> adj_;
};

struct GraphAnalysis {
  std::vector<std::vector<int>> components;  ///< sorted, each sorted
  std::vector<int> isolated;
  bool complete = false;
};

enum class GraphFormat { EdgeListJson, Graph6 };

SimpleGraph parse_graph(std::string_view text, GraphFormat format);
SimpleGraph parse_edge_list_json(std::string_view text);
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);
std::string to_edge_list_json(const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);
GraphAnalysis analyze(const SimpleGraph& g);

/// Returns g with vertex v renamed to perm[v].
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);

/// Upper-triangular adjacency bits in graph6 column order
/// (x01, x02, x12, x03, ...) as a '0'/'1' string.
std::string adjacency_bits(const SimpleGraph& g);
SimpleGraph from_adjacency_bits(int m, std::string_view bits);

constexpr int kMaxCanonicalOrder = 8;
constexpr int kMaxEnumerationOrder = 7;

/// Lexicographically least adjacency_bits over all vertex permutations.
/// Exhaustive, so restricted to m <= kMaxCanonicalOrder.
std::string canonical_form(const SimpleGraph& g);

/// The graph whose adjacency_bits equal its canonical form.
SimpleGraph canonical_graph(const SimpleGraph& g);

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// One representative per isomorphism class on n vertices, each in canonical
/// labelling, sorted by canonical string.
std::vector<SimpleGraph> enumerate_graphs(int n);

}  // namespace graphlie
