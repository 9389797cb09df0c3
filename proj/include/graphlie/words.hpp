#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/rational.hpp"

namespace graphlie {

/// A word over the vertex alphabet 0..m-1.
using Word = std::vector<int>;

/// Vertex multiplicities of a word or bracket.
using MultiDegree = std::vector<int>;

MultiDegree multidegree_of(const Word& w, int m);
MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);

/// Lexicographically least word in the trace class of w, where distinct
/// non-adjacent vertices of g commute.
///
/// Greedy: the first letter of any equivalent word is a letter that commutes
/// with everything before its first occurrence; take the smallest such letter
/// and recurse on the rest.
Word trace_normal_form(const Word& w, const SimpleGraph& g);

/// Finite linear combination of trace normal forms.
using TraceExpansion = std::map<Word, Rational>;

/// Binary bracket tree with vertex leaves, e.g. [v1,[v1,v2]].
class BracketWord {
public:
  static BracketWord leaf(int vertex);
  static BracketWord bracket(const BracketWord& left, const BracketWord& right);
  /// Parses the to_string() format: "v3", "[v1,[v1,v2]]" (1-based vertices).
  static BracketWord parse(std::string_view text);

  bool is_leaf() const;
  int vertex() const;
  BracketWord left() const;
  BracketWord right() const;

  int degree() const;
  MultiDegree multidegree(int m) const;
  Word letters() const;
  std::string to_string() const;

  friend bool operator==(const BracketWord& a, const BracketWord& b);

private:
  struct Node;
  explicit BracketWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_lyndon(const Word& w);

/// All Lyndon words of length 1..max_length over {0..alphabet-1}, in
/// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(int alphabet, int max_length);

/// Bracketing by standard factorization w = uv, v the longest proper Lyndon suffix.
BracketWord standard_bracketing(const Word& lyndon);

/// Image of b in the degree-k truncated trace algebra of g:
/// phi([u,w]) = phi(u)phi(w) - phi(w)phi(u), words normalized, length > k dropped.
TraceExpansion expand_bracket_word(const BracketWord& b, const SimpleGraph& g, int k);

/// Product in the truncated trace algebra.
TraceExpansion trace_product(const TraceExpansion& a, const TraceExpansion& b, const SimpleGraph& g,
                             int k);
/// a*b - b*a
TraceExpansion trace_commutator(const TraceExpansion& a, const TraceExpansion& b,
                                const SimpleGraph& g, int k);

}  // namespace graphlie
