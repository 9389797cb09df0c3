#include "graphlie/cohomology.hpp"

#include <map>

#include "graphlie/errors.hpp"

namespace graphlie {

// Pairs and triples are ranked in the combinatorial number system
// (a<b -> C(a,1)+C(b,2), x<y<z -> C(x,1)+C(y,2)+C(z,3)).
std::size_t CochainCoordinates::pair_index(std::size_t a, std::size_t b) const {
  return a + b * (b - 1) / 2;
}

std::size_t CochainCoordinates::triple_index(std::size_t x, std::size_t y, std::size_t z) const {
  return x + y * (y - 1) / 2 + z * (z - 1) * (z - 2) / 6;
}

namespace {

class SparseBuilder {
public:
  SparseBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  void add(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto& x = data_[r][c];
    x += v;
  }
  RatMatrix build() const {
    RatMatrix m(rows_, cols_);
    for (const auto& [r, row] : data_) m.set_row(r, SparseVector::from_map(row));
    return m;
  }

private:
  std::size_t rows_, cols_;
  std::map<std::size_t, std::map<std::size_t, Rational>> data_;
};

// Adds coef * sigma(e_p, e_q)_d for every output coordinate d, with the
// alternating sign, to row `row_base + d`.
void add_sigma_term(SparseBuilder& b, const CochainCoordinates& cc, std::size_t row_base,
                    std::size_t p, std::size_t q, const Rational& coef) {
  if (p == q) return;
  const Rational s = p < q ? coef : Rational(-coef);
  const std::size_t lo = std::min(p, q);
  const std::size_t hi = std::max(p, q);
  for (std::size_t d = 0; d < cc.n; ++d) b.add(row_base + d, cc.hom2_index(lo, hi, d), s);
}

void require_two_step(const LieAlgebra& a, const char* who) {
  const auto step = nilpotency_step(a);
  if (!step || *step > 2) throw DomainError(std::string(who) + ": algebra is not at most 2-step nilpotent");
}

}  // namespace

RatMatrix delta1_matrix(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  const CochainCoordinates cc{n};
  const auto& mu = a.bracket();
  SparseBuilder b(cc.hom2_dim(), cc.hom1_dim());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::size_t base = cc.pair_index(x, y) * n;
      for (std::size_t c = 0; c < n; ++c) {
        // [f(e_x), e_y]
        if (mu.nonzero(c, y))
          for (const auto& e : mu.value(c, y).entries()) b.add(base + e.index, cc.hom1_index(x, c), e.value);
        // [e_x, f(e_y)]
        if (mu.nonzero(x, c))
          for (const auto& e : mu.value(x, c).entries()) b.add(base + e.index, cc.hom1_index(y, c), e.value);
      }
      // -f([e_x, e_y])
      for (const auto& e : mu.upper(x, y).entries())
        for (std::size_t d = 0; d < n; ++d) b.add(base + d, cc.hom1_index(e.index, d), -e.value);
    }
  return b.build();
}

RatMatrix delta2_matrix(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  const CochainCoordinates cc{n};
  const auto& mu = a.bracket();
  SparseBuilder b(cc.delta2_rows(), cc.hom2_dim());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const std::size_t base = cc.triple_index(x, y, z) * n;
        for (std::size_t c = 0; c < n; ++c) {
          if (mu.nonzero(x, c))  // + [x, s(y,z)]
            for (const auto& e : mu.value(x, c).entries()) b.add(base + e.index, cc.hom2_index(y, z, c), e.value);
          if (mu.nonzero(y, c))  // - [y, s(x,z)]
            for (const auto& e : mu.value(y, c).entries()) b.add(base + e.index, cc.hom2_index(x, z, c), -e.value);
          if (mu.nonzero(z, c))  // + [z, s(x,y)]
            for (const auto& e : mu.value(z, c).entries()) b.add(base + e.index, cc.hom2_index(x, y, c), e.value);
        }
        for (const auto& e : mu.upper(x, y).entries()) add_sigma_term(b, cc, base, e.index, z, -e.value);
        for (const auto& e : mu.upper(x, z).entries()) add_sigma_term(b, cc, base, e.index, y, e.value);
        for (const auto& e : mu.upper(y, z).entries()) add_sigma_term(b, cc, base, e.index, x, -e.value);
      }
  return b.build();
}

RatMatrix eta2_matrix(const LieAlgebra& a) {
  require_two_step(a, "eta2_matrix");
  const std::size_t n = a.dim();
  const CochainCoordinates cc{n};
  const auto& mu = a.bracket();
  SparseBuilder b(cc.eta2_rows(), cc.hom2_dim());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t base = (cc.pair_index(x, y) * n + z) * n;
        // [s(x,y), z]
        for (std::size_t c = 0; c < n; ++c)
          if (mu.nonzero(c, z))
            for (const auto& e : mu.value(c, z).entries()) b.add(base + e.index, cc.hom2_index(x, y, c), e.value);
        // s([x,y], z)
        for (const auto& e : mu.upper(x, y).entries()) add_sigma_term(b, cc, base, e.index, z, e.value);
      }
  return b.build();
}

Vector cochain_vector(const AlternatingMap& s) {
  const std::size_t n = s.dim();
  const CochainCoordinates cc{n};
  Vector v(cc.hom2_dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (const auto& e : s.upper(a, b).entries()) v[cc.hom2_index(a, b, e.index)] = e.value;
  return v;
}

AlternatingMap cochain_map(const Vector& coords, std::size_t n) {
  const CochainCoordinates cc{n};
  if (coords.size() != cc.hom2_dim()) throw DomainError("cochain_map: coordinate length mismatch");
  AlternatingMap s(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      SparseVector v;
      for (std::size_t c = 0; c < n; ++c) v.push_back(c, coords[cc.hom2_index(a, b, c)]);
      s.set(a, b, v);
    }
  return s;
}

// ---------------------------------------------------------------------------
// H^2_{2-nil}

namespace {

using Weight = std::vector<int>;

Weight combine(const Weight& plus, std::initializer_list<const Weight*> minus) {
  Weight w = plus;
  for (const Weight* m : minus)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= (*m)[i];
  return w;
}

struct IndexedWeights {
  std::vector<Weight> hom1, hom2, delta2_rows, eta2_rows;
};

IndexedWeights index_weights(std::size_t n, std::span<const MultiDegree> w) {
  const CochainCoordinates cc{n};
  IndexedWeights iw;
  iw.hom1.resize(cc.hom1_dim());
  iw.hom2.resize(cc.hom2_dim());
  iw.delta2_rows.resize(cc.delta2_rows());
  iw.eta2_rows.resize(cc.eta2_rows());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) iw.hom1[cc.hom1_index(a, b)] = combine(w[b], {&w[a]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        iw.hom2[cc.hom2_index(a, b, c)] = combine(w[c], {&w[a], &w[b]});
        for (std::size_t z = 0; z < n; ++z)
          iw.eta2_rows[(cc.pair_index(a, b) * n + z) * n + c] = combine(w[c], {&w[a], &w[b], &w[z]});
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        for (std::size_t d = 0; d < n; ++d)
          iw.delta2_rows[cc.triple_index(x, y, z) * n + d] = combine(w[d], {&w[x], &w[y], &w[z]});
  return iw;
}

void check_homogeneous(const RatMatrix& m, const std::vector<Weight>& row_w,
                       const std::vector<Weight>& col_w, const char* name) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r).entries())
      if (row_w[r] != col_w[e.index])
        throw DomainError(std::string("h2_nil: the supplied weights are not respected by ") + name);
}

SparseVector concat(const SparseVector& a, const SparseVector& b, std::size_t offset) {
  SparseVector out = a;
  for (const auto& e : b.entries()) out.push_back(offset + e.index, e.value);
  return out;
}

}  // namespace

H2NilReport h2_nil(const LieAlgebra& a, std::span<const MultiDegree> weights) {
  require_two_step(a, "h2_nil");
  const std::size_t n = a.dim();
  const CochainCoordinates cc{n};
  std::vector<MultiDegree> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(n, MultiDegree{});
  if (w.size() != n) throw DomainError("h2_nil: one weight per basis vector required");
  for (const auto& x : w)
    if (x.size() != w.front().size()) throw DomainError("h2_nil: weights of unequal length");

  const RatMatrix d1 = delta1_matrix(a);
  const RatMatrix d2 = delta2_matrix(a);
  const RatMatrix e2 = eta2_matrix(a);

  if (!multiply(d2, d1).is_zero()) throw InvariantViolation("h2_nil: delta2 * delta1 != 0");
  if (!multiply(e2, d1).is_zero()) throw InvariantViolation("h2_nil: Im delta1 is not inside ker eta2");

  const IndexedWeights iw = index_weights(n, w);
  check_homogeneous(d1, iw.hom2, iw.hom1, "delta1");
  check_homogeneous(d2, iw.delta2_rows, iw.hom2, "delta2");
  check_homogeneous(e2, iw.eta2_rows, iw.hom2, "eta2");

  // Column blocks of Hom(L^2 V, V) by weight. Ranks of column slices are
  // computed as ranks of the corresponding rows of the transposes.
  std::map<Weight, std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < cc.hom2_dim(); ++c) blocks[iw.hom2[c]].push_back(c);

  const RatMatrix d2t = d2.transpose();
  const RatMatrix e2t = e2.transpose();

  H2NilReport rep;
  rep.dim_hom2 = cc.hom2_dim();
  rep.blocks = blocks.size();
  for (const auto& [_, cols] : blocks) {
    Echelon im1(cc.hom1_dim());
    Echelon r2(d2.rows());
    Echelon re(e2.rows());
    Echelon rs(d2.rows() + e2.rows());
    for (std::size_t c : cols) {
      im1.insert(d1.row(c));
      r2.insert(d2t.row(c));
      re.insert(e2t.row(c));
      rs.insert(concat(d2t.row(c), e2t.row(c), d2.rows()));
    }
    rep.dim_im_delta1 += im1.rank();
    rep.dim_ker_delta2 += cols.size() - r2.rank();
    rep.dim_ker_eta2 += cols.size() - re.rank();
    rep.dim_intersection += cols.size() - rs.rank();
  }
  rep.h2_dim = rep.dim_intersection - rep.dim_im_delta1;
  rep.eta2_subset_delta2 = rep.dim_intersection == rep.dim_ker_eta2;
  return rep;
}

H2NilReport h2_nil(const GradedLieAlgebra& a) {
  std::vector<MultiDegree> w;
  w.reserve(a.dim());
  for (const auto& l : a.labels()) w.push_back(a.has_multidegrees() ? l.multidegree : MultiDegree{l.degree});
  return h2_nil(a.algebra(), w);
}

}  // namespace graphlie
