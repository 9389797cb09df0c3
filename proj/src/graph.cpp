#include "graphlie/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include <json.hpp>

#include "graphlie/errors.hpp"

namespace graphlie {

SimpleGraph::SimpleGraph(int m) : m_(m) {
  if (m < 1 || m > kMaxVertices)
    throw DomainError("graph order must be in 1.." + std::to_string(kMaxVertices) + ", got " +
                      std::to_string(m));
  adj_.assign(static_cast<std::size_t>(m), 0);
}

SimpleGraph::SimpleGraph(int m, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(m) {
  for (auto [i, j] : edges) add_edge(i, j);
}

void SimpleGraph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= m_ || j >= m_)
    throw DomainError("edge index out of range: {" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "}");
  if (i == j) throw DomainError("loop edge at vertex " + std::to_string(i + 1));
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

int SimpleGraph::degree(int i) const { return std::popcount(adj_[i]); }

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += static_cast<std::size_t>(std::popcount(a));
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and serialization

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeListJson ? parse_edge_list_json(text) : parse_graph6(text);
}

SimpleGraph parse_edge_list_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed edge-list JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer())
    throw DomainError("edge-list JSON needs an integer field \"m\"");
  const auto m = doc["m"].get<long long>();
  if (m < 1 || m > SimpleGraph::kMaxVertices)
    throw DomainError("edge-list JSON: m out of range");
  SimpleGraph g(static_cast<int>(m));
  if (!doc.contains("edges")) return g;
  const auto& edges = doc["edges"];
  if (!edges.is_array()) throw DomainError("edge-list JSON: \"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw DomainError("edge-list JSON: each edge must be a pair of integers");
    const auto i = e[0].get<long long>();
    const auto j = e[1].get<long long>();
    if (i < 1 || j < 1 || i > m || j > m)
      throw DomainError("edge-list JSON: vertex index out of range in [" + std::to_string(i) +
                        "," + std::to_string(j) + "]");
    if (g.adjacent(static_cast<int>(i - 1), static_cast<int>(j - 1)))
      throw DomainError("edge-list JSON: duplicate edge [" + std::to_string(i) + "," +
                        std::to_string(j) + "]");
    g.add_edge(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  return g;
}

std::string to_edge_list_json(const SimpleGraph& g) {
  nlohmann::json doc;
  doc["m"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (auto [i, j] : g.edges()) doc["edges"].push_back({i + 1, j + 1});
  return doc.dump();
}

SimpleGraph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw DomainError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw DomainError("graph6: byte outside printable range");
  if (text.front() == 126) throw DomainError("graph6: only orders up to 62 are supported");
  const int n = text.front() - 63;
  if (n < 1) throw DomainError("graph6: graph must have at least one vertex");
  const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes)
    throw DomainError("graph6: expected " + std::to_string(1 + nbytes) + " bytes, got " +
                      std::to_string(text.size()));
  std::string bits;
  bits.reserve(nbytes * 6);
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int v = text[1 + b] - 63;
    for (int s = 5; s >= 0; --s) bits.push_back(((v >> s) & 1) ? '1' : '0');
  }
  if (bits.find('1', nbits) != std::string::npos)
    throw DomainError("graph6: nonzero padding bits");
  bits.resize(nbits);
  return from_adjacency_bits(n, bits);
}

std::string to_graph6(const SimpleGraph& g) {
  if (g.order() > 62) throw DomainError("graph6: only orders up to 62 are supported");
  std::string out(1, static_cast<char>(63 + g.order()));
  std::string bits = adjacency_bits(g);
  while (bits.size() % 6 != 0) bits.push_back('0');
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int v = 0;
    for (std::size_t s = 0; s < 6; ++s) v = (v << 1) | (bits[b + s] == '1');
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

std::string adjacency_bits(const SimpleGraph& g) {
  std::string bits;
  const int n = g.order();
  bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
  return bits;
}

SimpleGraph from_adjacency_bits(int m, std::string_view bits) {
  SimpleGraph g(m);
  if (bits.size() != static_cast<std::size_t>(m * (m - 1) / 2))
    throw DomainError("adjacency bit-string has wrong length");
  std::size_t t = 0;
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      if (bits[t] == '1')
        g.add_edge(i, j);
      else if (bits[t] != '0')
        throw DomainError("adjacency bit-string must contain only '0'/'1'");
    }
  return g;
}

// ---------------------------------------------------------------------------
// Structure

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

GraphAnalysis analyze(const SimpleGraph& g) {
  const int m = g.order();
  GraphAnalysis out;
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    std::vector<int> members{s};
    comp[s] = id;
    for (std::size_t q = 0; q < members.size(); ++q) {
      const int u = members[q];
      for (int v = 0; v < m; ++v)
        if (g.adjacent(u, v) && comp[v] < 0) {
          comp[v] = id;
          members.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  for (int v = 0; v < m; ++v)
    if (g.degree(v) == 0) out.isolated.push_back(v);
  out.complete = g.edge_count() == static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
  return out;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.order()))
    throw DomainError("relabel: permutation size mismatch");
  SimpleGraph h(g.order());
  for (auto [i, j] : g.edges()) h.add_edge(perm[i], perm[j]);
  return h;
}

namespace {

// Bits packed most-significant-first in graph6 order, so that integer order
// equals lexicographic order of the '0'/'1' strings.
std::uint64_t best_code(const SimpleGraph& g) {
  const int n = g.order();
  const int nbits = n * (n - 1) / 2;
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // q[a] is the old vertex placed at new position a.
    std::uint64_t code = 0;
    int t = 0;
    bool worse = false;
    bool better = false;
    for (int j = 1; j < n && !worse; ++j)
      for (int i = 0; i < j; ++i, ++t) {
        const std::uint64_t bit = g.adjacent(q[i], q[j]) ? 1u : 0u;
        code = (code << 1) | bit;
        if (!better) {
          const std::uint64_t best_bit = (best >> (nbits - 1 - t)) & 1u;
          if (bit > best_bit) {
            worse = true;
            break;
          }
          if (bit < best_bit) better = true;
        }
      }
    if (!worse) best = code;
  } while (std::next_permutation(q.begin(), q.end()));
  return nbits == 0 ? 0 : best;
}

}  // namespace

std::string canonical_form(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw DomainError("canonical_form: exhaustive search limited to " +
                      std::to_string(kMaxCanonicalOrder) + " vertices");
  const int nbits = n * (n - 1) / 2;
  const std::uint64_t code = best_code(g);
  std::string bits(static_cast<std::size_t>(nbits), '0');
  for (int t = 0; t < nbits; ++t)
    if ((code >> (nbits - 1 - t)) & 1u) bits[static_cast<std::size_t>(t)] = '1';
  return bits;
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
  return from_adjacency_bits(g.order(), canonical_form(g));
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

std::vector<SimpleGraph> enumerate_graphs(int n) {
  if (n < 1) throw DomainError("enumerate_graphs: n must be positive");
  if (n > kMaxEnumerationOrder)
    throw DomainError("enumerate_graphs: n must be at most " + std::to_string(kMaxEnumerationOrder));
  if (n == 1) return {SimpleGraph(1)};
  // Every graph on n vertices is some (n-1)-vertex class plus a last vertex
  // joined to a subset, so extending all representatives covers every class.
  std::set<std::string> forms;
  for (const auto& base : enumerate_graphs(n - 1)) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      SimpleGraph g(n);
      for (auto [i, j] : base.edges()) g.add_edge(i, j);
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1u) g.add_edge(v, n - 1);
      forms.insert(canonical_form(g));
    }
  }
  std::vector<SimpleGraph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(from_adjacency_bits(n, f));
  return out;
}

}  // namespace graphlie
