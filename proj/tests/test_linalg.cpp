#include <doctest.h>

#include <random>

#include "graphlie/errors.hpp"
#include "graphlie/linalg.hpp"
#include "oracles.hpp"

using namespace graphlie;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density) {
  std::vector<Vector> d(rows, Vector(cols));
  for (auto& r : d)
    for (auto& x : r)
      if (static_cast<int>(rng() % 100) < density) x = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
  return RatMatrix::from_dense(d, cols);
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational text form") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4")) == "-4/1");
    CHECK(to_string(parse_rational("0")) == "0/1");
    CHECK_THROWS_AS(parse_rational("2/-4"), DomainError);  // sign belongs on the numerator
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
  }

  TEST_CASE("rref of a known matrix") {
    const auto m = RatMatrix::from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced.to_dense() == std::vector<Vector>{{1, 0, 1}, {0, 1, 1}});
  }

  TEST_CASE("rank agrees with dense elimination and with the transpose") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
      const RatMatrix m = random_matrix(rng, rows, cols, 35 + static_cast<int>(rng() % 50));
      CHECK(rank(m) == oracle::dense_rank(m.to_dense()));
      CHECK(rank(m) == rank(m.transpose()));
    }
  }

  TEST_CASE("kernel basis") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
      const RatMatrix m = random_matrix(rng, rows, cols, 50);
      const Subspace k = kernel_basis(m);
      CHECK(k.dim() + rank(m) == cols);
      for (std::size_t r = 0; r < k.dim(); ++r) CHECK(is_zero(m.apply(k.basis_vector(r))));
    }
  }

  TEST_CASE("Grassmann formula for sums and intersections") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng() % 6;
      const Subspace a = Subspace::span(random_matrix(rng, 1 + rng() % n, n, 40));
      const Subspace b = Subspace::span(random_matrix(rng, 1 + rng() % n, n, 40));
      const Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      for (std::size_t r = 0; r < i.dim(); ++r) {
        CHECK(a.contains(i.basis_vector(r)));
        CHECK(b.contains(i.basis_vector(r)));
      }
      for (std::size_t r = 0; r < a.dim(); ++r) CHECK(subspace_contains(s, a.basis_vector(r)));
    }
  }

  TEST_CASE("echelon coordinates reconstruct the vector") {
    std::mt19937 rng(17);
    const std::size_t n = 6;
    const RatMatrix m = random_matrix(rng, 4, n, 70);
    Echelon e(n, true);
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (e.insert(m.row(r), r)) kept.push_back(r);
    Vector target(n);
    for (std::size_t r : kept)
      for (std::size_t c = 0; c < n; ++c) target[c] += Rational(static_cast<int>(r) + 2) * m.at(r, c);
    const auto coords = e.coordinates(SparseVector::from_dense(target));
    REQUIRE(coords);
    Vector back(n);
    for (const auto& x : coords->entries())
      for (std::size_t c = 0; c < n; ++c) back[c] += x.value * m.at(x.index, c);
    CHECK(back == target);
    if (kept.size() < n) {
      // some unit vector lies outside the span
      bool outside = false;
      for (std::size_t c = 0; c < n; ++c) outside = outside || !e.coordinates(SparseVector::unit(c));
      CHECK(outside);
    }
  }

  TEST_CASE("matrix product") {
    const auto a = RatMatrix::from_dense({{1, 2}, {0, 1}}, 2);
    const auto b = RatMatrix::from_dense({{Rational(1, 2), 0}, {1, -1}}, 2);
    CHECK(multiply(a, b).to_dense() == std::vector<Vector>{{Rational(5, 2), -2}, {1, -1}});
    CHECK(multiply(a, RatMatrix::identity(2)) == a);
    CHECK(vstack(a, b).rows() == 4);
  }
}
