#include <doctest.h>

#include <numeric>
#include <random>

#include "graphlie/basis.hpp"
#include "graphlie/cohomology.hpp"
#include "graphlie/errors.hpp"
#include "oracles.hpp"

using namespace graphlie;

namespace {

const SimpleGraph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
const SimpleGraph k2K2(4, {{0, 1}, {2, 3}});

// Direct evaluation of the defining formulas on dense vectors, column by column.
Vector apply_f(const std::vector<Vector>& f, const Vector& x) {  // f[a] = f(e_a)
  Vector out(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) out[b] += x[a] * f[a][b];
  return out;
}

Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Vector> delta1_by_formula(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  const CochainCoordinates cc{n};
  std::vector<Vector> cols;  // one column per f = E_{pq}
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<Vector> f(n, Vector(n));
      f[p][q] = 1;
      Vector col(cc.hom2_dim());
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          const Vector ex = unit_vector(n, x), ey = unit_vector(n, y);
          const Vector v = sub(add(bracket_vectors(a, apply_f(f, ex), ey), bracket_vectors(a, ex, apply_f(f, ey))),
                               apply_f(f, bracket_vectors(a, ex, ey)));
          for (std::size_t d = 0; d < n; ++d) col[cc.pair_index(x, y) * n + d] = v[d];
        }
      cols.push_back(col);
    }
  return cols;
}

std::vector<Vector> as_columns(const RatMatrix& m) {
  std::vector<Vector> cols(m.cols(), Vector(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r).entries()) cols[e.index][r] = e.value;
  return cols;
}

/// Evaluates a 2-cochain on arbitrary vectors.
Vector sigma_at(const AlternatingMap& s, const Vector& x, const Vector& y) { return s.apply(x, y); }

/// Returns the list of (pair(x<y) ordered, value) images of delta2 and eta2 by formula.
std::pair<std::vector<Vector>, std::vector<Vector>> d2_e2_by_formula(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  const CochainCoordinates cc{n};
  std::vector<Vector> d2(cc.hom2_dim(), Vector(cc.delta2_rows())), e2(cc.hom2_dim(), Vector(cc.eta2_rows()));
  for (std::size_t col = 0; col < cc.hom2_dim(); ++col) {
    Vector coords(cc.hom2_dim());
    coords[col] = 1;
    const AlternatingMap s = cochain_map(coords, n);
    auto mu = [&](const Vector& x, const Vector& y) { return bracket_vectors(a, x, y); };
    auto sg = [&](const Vector& x, const Vector& y) { return sigma_at(s, x, y); };
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        const Vector ex = unit_vector(n, x), ey = unit_vector(n, y);
        for (std::size_t z = 0; z < n; ++z) {
          const Vector ez = unit_vector(n, z);
          const Vector eta = add(mu(sg(ex, ey), ez), sg(mu(ex, ey), ez));
          for (std::size_t d = 0; d < n; ++d) e2[col][(cc.pair_index(x, y) * n + z) * n + d] = eta[d];
          if (z <= y) continue;
          Vector v = add(sub(mu(ex, sg(ey, ez)), mu(ey, sg(ex, ez))), mu(ez, sg(ex, ey)));
          v = add(sub(sub(v, sg(mu(ex, ey), ez)), sg(mu(ey, ez), ex)), sg(mu(ex, ez), ey));
          for (std::size_t d = 0; d < n; ++d) d2[col][cc.triple_index(x, y, z) * n + d] = v[d];
        }
      }
  }
  return {d2, e2};
}

std::vector<SimpleGraph> all_graphs_upto(int n_max) {
  std::vector<SimpleGraph> out;
  for (int m = 1; m <= n_max; ++m)
    for (const auto& g : enumerate_graphs(m)) out.push_back(g);
  return out;
}

}  // namespace

TEST_SUITE("cohomology") {
  TEST_CASE("coordinate ranking is a bijection") {
    const CochainCoordinates cc{6};
    std::vector<char> seen2(cc.pairs()), seen3(cc.triples());
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b) {
        seen2.at(cc.pair_index(a, b)) += 1;
        for (std::size_t c = b + 1; c < 6; ++c) seen3.at(cc.triple_index(a, b, c)) += 1;
      }
    CHECK(std::all_of(seen2.begin(), seen2.end(), [](char x) { return x == 1; }));
    CHECK(std::all_of(seen3.begin(), seen3.end(), [](char x) { return x == 1; }));
  }

  TEST_CASE("matrices agree with the defining formulas") {
    for (const auto& g : {SimpleGraph(3, {{0, 1}}), SimpleGraph(3, {{0, 1}, {1, 2}}), kC4}) {
      const LieAlgebra a = structure_constants(g, 2).algebra();
      CHECK(as_columns(delta1_matrix(a)) == delta1_by_formula(a));
      const auto [d2, e2] = d2_e2_by_formula(a);
      CHECK(as_columns(delta2_matrix(a)) == d2);
      CHECK(as_columns(eta2_matrix(a)) == e2);
    }
    // delta2 on a 3-step algebra too
    const LieAlgebra a3 = structure_constants(SimpleGraph(2, {{0, 1}}), 3).algebra();
    CHECK(as_columns(delta2_matrix(a3)) == d2_e2_by_formula(a3).first);
  }

  TEST_CASE("abelian algebras") {
    const LieAlgebra a = LieAlgebra::abelian(3);
    CHECK(delta1_matrix(a).is_zero());
    CHECK(delta2_matrix(a).is_zero());
    CHECK(eta2_matrix(a).is_zero());
    CHECK(h2_nil(LieAlgebra::abelian(2)).h2_dim == 2);
    CHECK(h2_nil(LieAlgebra::abelian(3)).h2_dim == 9);
  }

  TEST_CASE("Heisenberg algebra h1") {
    const LieAlgebra h = structure_constants(SimpleGraph(2, {{0, 1}}), 2).algebra();
    const RatMatrix d1 = delta1_matrix(h);
    CHECK(rank(d1) == 3);
    CHECK(oracle::dense_rank(d1.to_dense()) == 3);
    // delta1(id) = mu
    Vector id(9);
    for (std::size_t i = 0; i < 3; ++i) id[i * 3 + i] = 1;
    CHECK(d1.apply(id) == cochain_vector(h.bracket()));
    // delta2(mu) = 0 and eta2(mu) = 0
    CHECK(is_zero(delta2_matrix(h).apply(cochain_vector(h.bracket()))));
    CHECK(is_zero(eta2_matrix(h).apply(cochain_vector(h.bracket()))));
  }

  TEST_CASE("cochain identities") {
    for (const auto& [g, k] : std::vector<std::pair<SimpleGraph, int>>{{kC4, 2}, {SimpleGraph(2, {{0, 1}}), 3}, {k2K2, 2}}) {
      const LieAlgebra a = structure_constants(g, k).algebra();
      CHECK(multiply(delta2_matrix(a), delta1_matrix(a)).is_zero());
    }
    CHECK_THROWS_AS(eta2_matrix(structure_constants(SimpleGraph(2, {{0, 1}}), 3).algebra()), DomainError);
    CHECK_THROWS_AS(h2_nil(structure_constants(SimpleGraph(2, {{0, 1}}), 3)), DomainError);
  }

  TEST_CASE("vanishing for the square and two disjoint edges") {
    const auto c4 = h2_nil(structure_constants(kC4, 2));
    CHECK(c4.h2_dim == 0);
    CHECK(c4.dim_ker_eta2 == c4.dim_im_delta1);
    CHECK(c4.eta2_subset_delta2);
    CHECK(h2_nil(structure_constants(k2K2, 2)).h2_dim == 0);
  }

  TEST_CASE("cochain vector round trip") {
    const AlternatingMap mu = structure_constants(kC4, 2).algebra().bracket();
    CHECK(cochain_map(cochain_vector(mu), mu.dim()) == mu);
  }

  TEST_CASE("blocked and unblocked computations agree") {
    for (const auto& g : all_graphs_upto(4)) {
      const auto a = structure_constants(g, 2);
      const H2NilReport blocked = h2_nil(a);
      H2NilReport plain = h2_nil(a.algebra());
      CHECK(plain.blocks <= 1);
      plain.blocks = blocked.blocks;
      CHECK(plain == blocked);
    }
  }

  TEST_CASE("weights the bracket does not respect are rejected") {
    const auto a = structure_constants(SimpleGraph(2, {{0, 1}}), 2);
    const std::vector<MultiDegree> w{{1}, {1}, {1}};
    CHECK_THROWS_AS(h2_nil(a.algebra(), w), DomainError);
    CHECK_THROWS_AS(h2_nil(a.algebra(), std::vector<MultiDegree>{{1}}), DomainError);
  }

  TEST_CASE("h2 is invariant under basis permutation") {
    std::mt19937 rng(41);
    for (const auto& g : {kC4, SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}), SimpleGraph(3, {{0, 1}})}) {
      const LieAlgebra a = structure_constants(g, 2).algebra();
      std::vector<std::size_t> perm(a.dim());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(h2_nil(permute_basis(a, perm)).h2_dim == h2_nil(a).h2_dim);
    }
  }

  TEST_CASE("ker eta2 lies in ker delta2 on all 2-step graph algebras up to 5 vertices") {
    for (const auto& g : all_graphs_upto(5)) {
      const auto r = h2_nil(structure_constants(g, 2));
      CHECK(r.eta2_subset_delta2);
      CHECK(r.dim_intersection >= r.dim_im_delta1);
    }
  }
}
