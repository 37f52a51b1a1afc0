#include "oracles.hpp"

#include "oddspan/blocks.hpp"
#include "oddspan/constructions.hpp"
#include "oddspan/cycles.hpp"
#include "oddspan/enumerate.hpp"

#include <doctest.h>

#include <random>

using namespace oddspan;

TEST_CASE("shortest_odd_cycle") {
  CHECK_FALSE(shortest_odd_cycle(cycle_graph(6)));
  auto bc = shortest_odd_cycle(bc_graph(2, 3));
  REQUIRE(bc);
  CHECK(bc->length() == 5);
  CHECK(is_cycle_of(bc_graph(2, 3), bc->vertices));
  CHECK(shortest_odd_cycle(petersen_graph())->length() == 5);
  CHECK(shortest_odd_cycle(with_edge(cycle_graph(9), 0, 2))->length() == 3);
}

TEST_CASE("has_cycle_of_length") {
  CHECK(has_cycle_of_length(cycle_graph(7), 7));
  CHECK_FALSE(has_cycle_of_length(petersen_graph(), 7));
  auto four = has_cycle_of_length(balanced_cycle_blowup(5, 2), 4);
  REQUIRE(four);
  CHECK(is_cycle_of(balanced_cycle_blowup(5, 2), four->vertices));
  CHECK_FALSE(has_cycle_of_length(cycle_graph(5), 2));
  CHECK_FALSE(has_cycle_of_length(cycle_graph(5), 6));
}

TEST_CASE("Petersen spectrum matches brute force") {
  auto p = petersen_graph();
  auto s = cycle_spectrum(p, 10);
  for (int L = 3; L <= 10; ++L)
    CHECK(s.present.contains(L) == oracle::has_cycle(p, L));
  CHECK(s.present == std::set<int>{5, 6, 8, 9});
}

TEST_CASE("has_cycle_of_length agrees with brute force on random graphs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    auto g = oracle::random_graph(rng, n, 0.2 + 0.05 * static_cast<double>(rng() % 10));
    for (int L = 3; L <= n; ++L) {
      auto found = has_cycle_of_length(g, L);
      REQUIRE(found.has_value() == oracle::has_cycle(g, L));
      if (found) {
        CHECK(found->length() == L);
        CHECK(is_cycle_of(g, found->vertices));
      }
    }
  }
}

TEST_CASE("has_cycle_through finds only cycles through the vertex") {
  // triangle 0-1-2 plus pendant path to a separate 5-cycle 3..7
  auto g = Graph::from_edges(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}});
  CHECK(has_cycle_through(g, 3, 0));
  CHECK_FALSE(has_cycle_through(g, 3, 5));
  CHECK(has_cycle_through(g, 5, 5));
  CHECK_FALSE(has_cycle_through(g, 5, 0));
  auto c = has_cycle_through(g, 5, 6);
  REQUIRE(c);
  CHECK(std::find(c->vertices.begin(), c->vertices.end(), 6) != c->vertices.end());
}

TEST_CASE("cycle_spectrum clamps the cap") {
  auto s = cycle_spectrum(cycle_graph(5), 40);
  CHECK(s.cap == 5);
  CHECK(s.present == std::set<int>{5});
  CHECK(s.odd() == std::set<int>{5});
  CHECK(s.even().empty());
  CHECK(cycle_spectrum(complete_graph(5), 4).present == std::set<int>{3, 4});
}

TEST_CASE("is_family_free") {
  CHECK(is_family_free(balanced_cycle_blowup(9, 3), OddFamily({3, 5, 7})));
  CHECK(is_family_free(haggkvist_graph(3), OddFamily({11})));
  auto c5 = is_family_free(cycle_graph(5), OddFamily({5}));
  CHECK_FALSE(c5);
  REQUIRE(c5.witness);
  CHECK(c5.witness->length() == 5);
  // smallest forbidden length is reported first
  auto k5 = is_family_free(complete_graph(5), OddFamily({3, 5}));
  REQUIRE(k5.witness);
  CHECK(k5.witness->length() == 3);
}

TEST_CASE("block_decomposition") {
  auto bc = block_decomposition(bc_graph(2, 2));
  CHECK(bc.blocks.size() == 6);
  CHECK(bc.cut_vertices.count() == 5);
  for (int v = 0; v < 5; ++v)
    CHECK(bc.cut_vertices.test(v));

  auto path = block_decomposition(path_graph(4));
  CHECK(path.blocks.size() == 3);
  CHECK(path.cut_vertices.count() == 2);

  auto iso = block_decomposition(Graph::empty(3));
  CHECK(iso.blocks.empty());
}
