#include <algorithm>

#include "graphlie/errors.hpp"
#include "graphlie/words.hpp"

namespace graphlie {

MultiDegree multidegree_of(const Word& w, int m) {
  MultiDegree d(static_cast<std::size_t>(m), 0);
  for (int a : w) ++d.at(static_cast<std::size_t>(a));
  return d;
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw std::logic_error("multidegree length mismatch");
  MultiDegree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Word trace_normal_form(const Word& w, const SimpleGraph& g) {
  for (int a : w)
    if (a < 0 || a >= g.order())
      throw DomainError("trace_normal_form: letter " + std::to_string(a) + " out of range");
  Word rest = w;
  Word out;
  out.reserve(w.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < rest.size(); ++p) {
      if (rest[p] >= rest[best]) continue;
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q) movable = g.commute(rest[q], rest[p]);
      if (movable) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

// ---------------------------------------------------------------------------
// BracketWord

struct BracketWord::Node {
  int vertex = -1;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int degree = 1;
};

BracketWord BracketWord::leaf(int vertex) {
  if (vertex < 0) throw DomainError("bracket leaf must be a vertex index");
  auto n = std::make_shared<Node>();
  n->vertex = vertex;
  return BracketWord(std::move(n));
}

BracketWord BracketWord::bracket(const BracketWord& left, const BracketWord& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->degree = left.degree() + right.degree();
  return BracketWord(std::move(n));
}

bool BracketWord::is_leaf() const { return node_->vertex >= 0; }
int BracketWord::vertex() const { return node_->vertex; }
int BracketWord::degree() const { return node_->degree; }

BracketWord BracketWord::left() const {
  if (is_leaf()) throw std::logic_error("BracketWord::left on a leaf");
  return BracketWord(node_->left);
}

BracketWord BracketWord::right() const {
  if (is_leaf()) throw std::logic_error("BracketWord::right on a leaf");
  return BracketWord(node_->right);
}

Word BracketWord::letters() const {
  Word out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->vertex >= 0) {
      out.push_back(n->vertex);
    } else {
      stack.push_back(n->right.get());
      stack.push_back(n->left.get());
    }
  }
  return out;
}

MultiDegree BracketWord::multidegree(int m) const { return multidegree_of(letters(), m); }

std::string BracketWord::to_string() const {
  if (is_leaf()) return "v" + std::to_string(vertex() + 1);
  return "[" + BracketWord(node_->left).to_string() + "," + BracketWord(node_->right).to_string() + "]";
}

bool operator==(const BracketWord& a, const BracketWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.vertex() == b.vertex();
  return BracketWord(a.node_->left) == BracketWord(b.node_->left) &&
         BracketWord(a.node_->right) == BracketWord(b.node_->right);
}

BracketWord BracketWord::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> DomainError {
    return DomainError("malformed bracket label \"" + std::string(text) + "\": " + why);
  };
  auto parse_node = [&](auto&& self) -> BracketWord {
    if (pos >= text.size()) throw fail("unexpected end");
    if (text[pos] == '[') {
      ++pos;
      BracketWord l = self(self);
      if (pos >= text.size() || text[pos] != ',') throw fail("expected ','");
      ++pos;
      BracketWord r = self(self);
      if (pos >= text.size() || text[pos] != ']') throw fail("expected ']'");
      ++pos;
      return bracket(l, r);
    }
    if (text[pos] != 'v') throw fail("expected 'v' or '['");
    ++pos;
    int v = 0;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0 || v < 1) throw fail("bad vertex index");
    return leaf(v - 1);
  };
  BracketWord out = parse_node(parse_node);
  if (pos != text.size()) throw fail("trailing characters");
  return out;
}

// ---------------------------------------------------------------------------
// Lyndon words

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    // w must be strictly smaller than each proper rotation.
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int alphabet, int max_length) {
  std::vector<Word> out;
  if (alphabet < 1 || max_length < 1) return out;
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t len = w.size();
    while (w.size() < static_cast<std::size_t>(max_length)) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

BracketWord standard_bracketing(const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw DomainError("standard_bracketing: not a Lyndon word");
  if (lyndon.size() == 1) return BracketWord::leaf(lyndon.front());
  for (std::size_t i = 1; i < lyndon.size(); ++i) {
    Word v(lyndon.begin() + static_cast<std::ptrdiff_t>(i), lyndon.end());
    if (is_lyndon(v)) {
      Word u(lyndon.begin(), lyndon.begin() + static_cast<std::ptrdiff_t>(i));
      return BracketWord::bracket(standard_bracketing(u), standard_bracketing(v));
    }
  }
  throw std::logic_error("standard_bracketing: no Lyndon suffix");  // unreachable: last letter is Lyndon
}

// ---------------------------------------------------------------------------
// Truncated trace algebra

TraceExpansion trace_product(const TraceExpansion& a, const TraceExpansion& b, const SimpleGraph& g,
                             int k) {
  TraceExpansion out;
  for (const auto& [u, x] : a)
    for (const auto& [w, y] : b) {
      if (static_cast<int>(u.size() + w.size()) > k) continue;
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      auto [it, inserted] = out.try_emplace(trace_normal_form(uw, g), x * y);
      if (!inserted) {
        it->second += x * y;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

TraceExpansion trace_commutator(const TraceExpansion& a, const TraceExpansion& b,
                                const SimpleGraph& g, int k) {
  TraceExpansion out = trace_product(a, b, g, k);
  for (const auto& [w, y] : trace_product(b, a, g, k)) {
    auto [it, inserted] = out.try_emplace(w, -y);
    if (!inserted) {
      it->second -= y;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

TraceExpansion expand_bracket_word(const BracketWord& b, const SimpleGraph& g, int k) {
  if (b.degree() > k)
    throw DomainError("expand_bracket_word: degree " + std::to_string(b.degree()) + " exceeds k = " +
                      std::to_string(k));
  if (b.is_leaf()) {
    if (b.vertex() >= g.order()) throw DomainError("expand_bracket_word: vertex out of range");
    return {{Word{b.vertex()}, Rational(1)}};
  }
  const BracketWord l = b.left();
  const BracketWord r = b.right();
  return trace_commutator(expand_bracket_word(l, g, k), expand_bracket_word(r, g, k), g, k);
}

}  // namespace graphlie
