#include <doctest.h>

#include <random>

#include "graphlie/errors.hpp"
#include "graphlie/graph.hpp"
#include "oracles.hpp"

using namespace graphlie;

TEST_SUITE("graph") {
  TEST_CASE("edge-list JSON parsing and round trip") {
    const SimpleGraph g = parse_edge_list_json(R"({"m":3,"edges":[[1,2],[1,3]]})");
    CHECK(g.order() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK(g.commute(1, 2));
    CHECK_FALSE(g.commute(1, 1));
    CHECK(parse_edge_list_json(to_edge_list_json(g)) == g);
    CHECK(parse_edge_list_json(R"({"m":4})").edge_count() == 0);
  }

  TEST_CASE("edge-list JSON errors") {
    CHECK_THROWS_AS(parse_edge_list_json("{"), DomainError);
    CHECK_THROWS_AS(parse_edge_list_json(R"({"edges":[]})"), DomainError);
    CHECK_THROWS_AS(parse_edge_list_json(R"({"m":0})"), DomainError);
    CHECK_THROWS_AS(parse_edge_list_json(R"({"m":3,"edges":[[1,1]]})"), DomainError);
    CHECK_THROWS_AS(parse_edge_list_json(R"({"m":3,"edges":[[1,4]]})"), DomainError);
    CHECK_THROWS_AS(parse_edge_list_json(R"({"m":3,"edges":[[1,2],[2,1]]})"), DomainError);
    CHECK_THROWS_AS(parse_edge_list_json(R"({"m":3,"edges":[[1,2,3]]})"), DomainError);
  }

  TEST_CASE("graph6 known codes") {
    CHECK(parse_graph6("C~").edge_count() == 6);
    CHECK(parse_graph6("Bw").edge_count() == 3);
    CHECK(parse_graph6("A_").adjacent(0, 1));
    CHECK(parse_graph6(">>graph6<<C~\n").edge_count() == 6);
    const SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(parse_graph6(to_graph6(c4)) == c4);
  }

  TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), DomainError);
    CHECK_THROWS_AS(parse_graph6("C"), DomainError);    // missing bytes
    CHECK_THROWS_AS(parse_graph6("A`"), DomainError);   // nonzero padding
    CHECK_THROWS_AS(parse_graph6("C~~"), DomainError);  // too many bytes
  }

  TEST_CASE("analysis") {
    const SimpleGraph g(5, {{0, 1}, {2, 3}});
    const auto a = analyze(g);
    CHECK(a.components.size() == 3);
    CHECK(a.isolated == std::vector<int>{4});
    CHECK_FALSE(a.complete);
    CHECK(analyze(parse_graph6("C~")).complete);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).edge_count() == 10 - 2);
  }

  TEST_CASE("class counts match brute force") {
    for (int n = 1; n <= 5; ++n) CHECK(enumerate_graphs(n).size() == oracle::count_graph_classes(n));
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK(enumerate_graphs(7).size() == 1044);
    CHECK_THROWS_AS(enumerate_graphs(8), DomainError);
  }

  TEST_CASE("canonical form is a relabelling invariant") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 2 + static_cast<int>(rng() % 6);
      SimpleGraph g(m);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (rng() % 2) g.add_edge(i, j);
      std::vector<int> perm(static_cast<std::size_t>(m));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const SimpleGraph h = relabel(g, perm);
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(is_isomorphic(g, h));
      CHECK(adjacency_bits(canonical_graph(g)) == canonical_form(g));
    }
    CHECK_FALSE(is_isomorphic(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}}), SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})));
  }
}
