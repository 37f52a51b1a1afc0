#include "oracles.hpp"

#include "oddspan/constructions.hpp"
#include "oddspan/proof_kit.hpp"

#include <doctest.h>

#include <random>

using namespace oddspan;

TEST_CASE("min_degree_subgraph") {
  auto k4_pendant = with_edge(disjoint_union(complete_graph(4), Graph::empty(1)), 0, 4);
  auto core = min_degree_subgraph(k4_pendant);
  CHECK(core.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(core.graph == complete_graph(4));

  auto edge = min_degree_subgraph(complete_graph(2));
  CHECK(edge.vertices == std::vector<int>{0, 1});

  auto star = min_degree_subgraph(complete_bipartite(1, 9));
  CHECK(star.vertices.size() == 10);

  CHECK_THROWS_AS(min_degree_subgraph(Graph::empty(4)), Error);
}

TEST_CASE("min_degree_subgraph on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 39);
    auto g = oracle::random_graph(rng, n, 0.02 + 0.02 * static_cast<double>(rng() % 15));
    if (g.size() == 0)
      continue;
    auto core = min_degree_subgraph(g);
    REQUIRE_FALSE(core.vertices.empty());
    CHECK(std::is_sorted(core.vertices.begin(), core.vertices.end()));
    CHECK(core.graph == induced_subgraph(g, core.vertices));
    CHECK(static_cast<long>(min_degree(core.graph)) * g.order() >= g.size());
  }
}

TEST_CASE("longest_path_order") {
  CHECK(longest_path_order(path_graph(5)) == 5);
  CHECK(longest_path_order(cycle_graph(5)) == 5);
  CHECK(longest_path_order(petersen_graph()) == 10);
  CHECK(longest_path_order(Graph::empty(3)) == 1);
  CHECK(longest_path_order(complete_bipartite(2, 5)) == 5);
  CHECK_THROWS_AS(longest_path_order(Graph::empty(0)), Error);
  CHECK_THROWS_AS(longest_path_order(Graph::empty(21)), Error);

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    auto g = oracle::random_graph(rng, n, 0.3);
    CHECK(longest_path_order(g) == oracle::longest_path(g));
  }
}

TEST_CASE("erdos_gallai_holds") {
  CHECK(erdos_gallai_holds(complete_graph(3), 3));
  CHECK(erdos_gallai_holds(cycle_graph(4), 3));
  CHECK(erdos_gallai_holds(complete_graph(4), 4));
  // disjoint cliques K_k are tight: 2e = (k-1) n
  for (int k = 2; k <= 6; ++k) {
    auto g = disjoint_union(complete_graph(k), complete_graph(k));
    CHECK(2 * g.size() == (k - 1) * g.order());
    CHECK(erdos_gallai_holds(g, k));
  }
}

TEST_CASE("greedy_bipartite_path") {
  auto k55 = complete_bipartite(5, 5);
  VertexSet x, y;
  for (int v = 0; v < 5; ++v) {
    x.set(v);
    y.set(v + 5);
  }
  PathRequest req{&k55, x, y, 7, Side::x, Side::x};
  auto path = greedy_bipartite_path(req);
  REQUIRE(path);
  CHECK(path->size() == 7);
  CHECK(is_path_of(k55, *path));
  CHECK(x.test(path->front()));
  CHECK(x.test(path->back()));

  auto k33 = complete_bipartite(3, 3);
  VertexSet x3, y3;
  for (int v = 0; v < 3; ++v) {
    x3.set(v);
    y3.set(v + 3);
  }
  CHECK_FALSE(greedy_bipartite_path({&k33, x3, y3, 7, Side::x, Side::x}));

  auto mixed = greedy_bipartite_path({&k55, x, y, 6, Side::x, Side::y});
  REQUIRE(mixed);
  CHECK(is_path_of(k55, *mixed));
  CHECK(y.test(mixed->back()));

  CHECK_THROWS_AS(greedy_bipartite_path({&k55, x, y, 6, Side::x, Side::x}), Error);
  CHECK_THROWS_AS(greedy_bipartite_path({&k55, x, x, 3, Side::x, Side::x}), Error);
}

TEST_CASE("greedy_bipartite_path spans an 8-cycle") {
  // the host is the 8-cycle 0-4-3-7-2-6-1-5
  auto g = Graph::from_edges(8, {{0, 4}, {0, 5}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 4}});
  VertexSet x, y;
  for (int v = 0; v < 4; ++v) {
    x.set(v);
    y.set(v + 4);
  }
  auto path = greedy_bipartite_path({&g, x, y, 8, Side::x, Side::y});
  REQUIRE(path);
  CHECK(is_path_of(g, *path));
}

TEST_CASE("recognize_cycle_blowup") {
  auto s = recognize_cycle_blowup(balanced_cycle_blowup(7, 3));
  REQUIRE(s);
  CHECK(s->m == 7);
  CHECK(s->sizes == std::vector<int>(7, 3));
  auto c5 = recognize_cycle_blowup(cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->sizes == std::vector<int>(5, 1));
  CHECK_FALSE(recognize_cycle_blowup(complete_bipartite(3, 3)));
  CHECK_FALSE(recognize_cycle_blowup(cycle_graph(4)));

  std::vector<int> sizes{1, 2, 3, 1, 2};
  auto u = recognize_cycle_blowup(blow_up(cycle_graph(5), sizes));
  REQUIRE(u);
  CHECK(u->sizes == sizes);
}

TEST_CASE("recognize_bc_graph") {
  CHECK(recognize_bc_graph(bc_graph(2, 3)) == BcShape{2, 3});
  CHECK_FALSE(recognize_bc_graph(cycle_graph(5)));
  for (int ell = 1; ell <= 4; ++ell)
    for (int t = 1; t <= 3; ++t)
      CHECK(recognize_bc_graph(bc_graph(ell, t)) == BcShape{ell, t});
}

TEST_CASE("recognizers reject one extra edge") {
  std::mt19937_64 rng(41);
  for (auto base : {bc_graph(2, 3), bc_graph(3, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      int u = static_cast<int>(rng() % base.order()), v = static_cast<int>(rng() % base.order());
      if (u == v || base.adjacent(u, v))
        continue;
      CHECK_FALSE(recognize_bc_graph(with_edge(base, u, v)));
    }
  }
  auto blow = balanced_cycle_blowup(7, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int u = static_cast<int>(rng() % 14), v = static_cast<int>(rng() % 14);
    if (u == v || blow.adjacent(u, v))
      continue;
    CHECK_FALSE(recognize_cycle_blowup(with_edge(blow, u, v)));
  }
}

TEST_CASE("recognizers survive relabelling") {
  std::mt19937_64 rng(43);
  auto bc = bc_graph(2, 2);
  CHECK(recognize_bc_graph(relabel(bc, oracle::random_permutation(rng, bc.order()))) == BcShape{2, 2});
  auto blow = balanced_cycle_blowup(9, 2);
  auto r = recognize_cycle_blowup(relabel(blow, oracle::random_permutation(rng, blow.order())));
  REQUIRE(r);
  CHECK(r->m == 9);
  CHECK(r->sizes == std::vector<int>(9, 2));
}
