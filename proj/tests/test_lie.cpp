#include <doctest.h>

#include "graphlie/basis.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/lie_algebra.hpp"

using namespace graphlie;

namespace {

LieAlgebra heisenberg() {
  AlternatingMap mu(3);
  mu.set(0, 1, SparseVector::unit(2));
  return LieAlgebra(mu);
}

std::vector<SimpleGraph> sample_graphs() {
  return {SimpleGraph(3, {{0, 1}, {0, 2}}), SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
          SimpleGraph(4, {{0, 1}, {2, 3}}), SimpleGraph(2, {{0, 1}}), SimpleGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})};
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("alternating map sign conventions") {
    AlternatingMap mu(3);
    mu.set(1, 0, SparseVector::unit(2));
    CHECK(mu.value(0, 1) == SparseVector::unit(2).scaled(Rational(-1)));
    CHECK(mu.value(1, 0) == SparseVector::unit(2));
    CHECK(mu.value(1, 1).empty());
    CHECK_THROWS_AS(mu.set(1, 1, SparseVector::unit(0)), DomainError);
    CHECK(heisenberg().bracket().apply(Vector{1, 0, 0}, Vector{0, 1, 0}) == Vector{0, 0, 1});
  }

  TEST_CASE("Jacobi and multidegree law on graph algebras") {
    for (const auto& g : sample_graphs())
      for (int k = 1; k <= 4; ++k) {
        const auto a = structure_constants(g, k);
        CHECK(jacobi_report(a.algebra()).empty());
        CHECK(grading_support_check(a));
      }
  }

  TEST_CASE("corrupted tensors are detected") {
    AlternatingMap bad(3);
    bad.set(0, 1, SparseVector::unit(0));
    bad.set(1, 2, SparseVector::unit(1));
    CHECK_FALSE(jacobi_report(LieAlgebra(bad)).empty());

    const auto a = structure_constants(SimpleGraph(3, {{0, 1}, {0, 2}}), 3);
    AlternatingMap moved = a.algebra().bracket();
    // [v1,v2] now lands on [v1,v3], a different multidegree
    moved.set(0, 1, SparseVector::unit(4));
    CHECK_FALSE(grading_support_check(GradedLieAlgebra(LieAlgebra(moved), 3, a.labels())));
    CHECK(grading_support_check(GradedLieAlgebra(LieAlgebra::abelian(2), 1, {{1, {}, {1, 0}}, {1, {}, {0, 1}}})));
    CHECK_THROWS_AS(grading_support_check(GradedLieAlgebra(LieAlgebra::abelian(1), 1, {BasisLabel{}})), DomainError);
  }

  TEST_CASE("lower central series matches the grading") {
    for (const auto& g : sample_graphs())
      for (int k = 1; k <= 4; ++k) {
        const auto a = structure_constants(g, k);
        const auto grading = a.grading();
        std::vector<std::size_t> suffix;
        for (std::size_t i = 0; i < grading.size(); ++i) {
          std::size_t s = 0;
          for (std::size_t j = i; j < grading.size(); ++j) s += grading[j];
          if (s > 0 || suffix.empty() || suffix.back() > 0) suffix.push_back(s);
        }
        if (suffix.back() != 0) suffix.push_back(0);
        CHECK(lower_central_series_dims(a.algebra()) == suffix);
      }
    CHECK(nilpotency_step(heisenberg()) == 2);
    CHECK(nilpotency_step(LieAlgebra::abelian(3)) == 1);
  }

  TEST_CASE("center") {
    const Subspace z = center(heisenberg());
    CHECK(z.dim() == 1);
    CHECK(z.contains(Vector{0, 0, 5}));
    CHECK(center(LieAlgebra::abelian(3)).dim() == 3);
  }

  TEST_CASE("associated graded of a graph algebra is itself") {
    for (const auto& g : sample_graphs()) {
      const auto a = structure_constants(g, 3);
      const auto gr = associated_graded(a.algebra());
      CHECK(gr.algebra() == a.algebra());
      for (std::size_t i = 0; i < a.dim(); ++i) CHECK(gr.degree(i) == a.degree(i));
    }
  }

  TEST_CASE("associated graded of a filtered algebra") {
    // [e1,e2] = e3 + e4, [e1,e3] = e4: gr has [e1,e2] = e3 only in degree 2.
    AlternatingMap mu(4);
    mu.set(0, 1, SparseVector::from_dense({0, 0, 1, 1}));
    mu.set(0, 2, SparseVector::unit(3));
    const auto gr = associated_graded(LieAlgebra(mu));
    CHECK(gr.grading() == std::vector<std::size_t>{2, 1, 1});
    CHECK(jacobi_report(gr.algebra()).empty());
    CHECK(lower_central_series_dims(gr.algebra()) == std::vector<std::size_t>{4, 2, 1, 0});
  }

  TEST_CASE("non-nilpotent input is rejected by associated_graded") {
    AlternatingMap mu(2);
    mu.set(0, 1, SparseVector::unit(1));
    CHECK_FALSE(nilpotency_step(LieAlgebra(mu)).has_value());
    CHECK_THROWS_AS(associated_graded(LieAlgebra(mu)), DomainError);
  }

  TEST_CASE("permuting the basis preserves Jacobi and dimensions") {
    const auto a = structure_constants(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}), 3);
    std::vector<std::size_t> perm(a.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
    const LieAlgebra p = permute_basis(a.algebra(), perm);
    CHECK(jacobi_report(p).empty());
    CHECK(lower_central_series_dims(p) == lower_central_series_dims(a.algebra()));
    CHECK(permute_basis(p, perm) == a.algebra());
  }
}
