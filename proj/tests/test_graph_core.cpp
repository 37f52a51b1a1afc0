#include "oracles.hpp"

#include "oddspan/canon.hpp"
#include "oddspan/constructions.hpp"
#include "oddspan/graph.hpp"
#include "oddspan/graph6.hpp"

#include <doctest.h>

#include <random>

using namespace oddspan;

TEST_CASE("graph_from_edges") {
  auto tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.size() == 3);
  CHECK(tri.degrees() == std::vector<int>{2, 2, 2});

  auto e4 = Graph::empty(4);
  CHECK(e4.size() == 0);
  CHECK(min_degree(e4) == 0);

  auto k2 = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(k2.size() == 1);
  CHECK(k2.adjacent(1, 0));

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), Error);
  CHECK_THROWS_AS(Graph::empty(kMaxVertices + 1), Error);
  CHECK_THROWS_AS(min_degree(Graph::empty(0)), Error);
}

TEST_CASE("rows span several words") {
  GraphBuilder b(300);
  for (int v = 0; v + 1 < 300; ++v)
    b.add_edge(v, v + 1);
  b.add_edge(0, 299);
  auto g = std::move(b).build();
  CHECK(g.size() == 300);
  CHECK(min_degree(g) == 2);
  CHECK(max_degree(g) == 2);
  CHECK(g.adjacent(299, 0));
  CHECK(g.neighbors(150).count() == 2);
  CHECK_FALSE(is_bipartite(cycle_graph(301)));
  CHECK(is_bipartite(g));
}

TEST_CASE("builder removes edges") {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(1, 2).remove_edge(1, 0);
  auto g = std::move(b).build();
  CHECK(g.size() == 1);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("min_degree of the extremal constructions") {
  CHECK(min_degree(cycle_graph(5)) == 2);
  auto bc = bc_graph(2, 3);
  CHECK(bc.order() == 30);
  CHECK(min_degree(bc) * 2 * 5 == bc.order());
  auto c7 = balanced_cycle_blowup(7, 3);
  CHECK(min_degree(c7) == 6);
  CHECK(min_degree(c7) * 7 == 2 * c7.order());
}

TEST_CASE("is_bipartite") {
  auto k33 = is_bipartite(complete_bipartite(3, 3));
  REQUIRE(k33);
  CHECK(k33.bipartition->part_a.size() == 3);
  CHECK(k33.bipartition->part_b.size() == 3);

  auto c5 = is_bipartite(cycle_graph(5));
  CHECK_FALSE(c5);
  CHECK(c5.odd_cycle.size() == 5);
  CHECK(is_cycle_of(cycle_graph(5), c5.odd_cycle));

  auto bc = is_bipartite(bc_graph(2, 3));
  CHECK_FALSE(bc);
  CHECK(bc.odd_cycle.size() % 2 == 1);
  CHECK(is_cycle_of(bc_graph(2, 3), bc.odd_cycle));
}

TEST_CASE("is_bipartite agrees with two-colouring on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 25);
    auto g = oracle::random_graph(rng, n, 0.04 + 0.01 * static_cast<double>(rng() % 20));
    auto check = is_bipartite(g);
    REQUIRE(static_cast<bool>(check) == oracle::two_colourable(g));
    if (check) {
      std::vector<int> side(n, -1);
      for (int v : check.bipartition->part_a)
        side[v] = 0;
      for (int v : check.bipartition->part_b)
        side[v] = 1;
      for (auto [u, v] : g.edges())
        CHECK(side[u] + side[v] == 1);
    } else {
      CHECK(check.odd_cycle.size() % 2 == 1);
      CHECK(is_cycle_of(g, check.odd_cycle));
    }
  }
}

TEST_CASE("blow_up") {
  std::vector<int> ones(5, 1);
  CHECK(are_isomorphic(blow_up(cycle_graph(5), ones), cycle_graph(5)));

  std::vector<int> s34{3, 4};
  CHECK(blow_up(complete_graph(2), s34) == complete_bipartite(3, 4));

  std::vector<int> twos(7, 2);
  auto g = blow_up(cycle_graph(7), twos);
  CHECK(g.order() == 14);
  CHECK(g.size() == 28);
  CHECK(min_degree(g) == 4);
  CHECK(max_degree(g) == 4);

  std::vector<int> bad{1, 2};
  CHECK_THROWS_AS(blow_up(cycle_graph(5), bad), Error);
  std::vector<int> zero{1, 0, 1};
  CHECK_THROWS_AS(blow_up(cycle_graph(3), zero), Error);
}

TEST_CASE("blow_up edge count is the sum over edges of size products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto g = oracle::random_graph(rng, n, 0.5);
    std::vector<int> sizes(n);
    int total = 0;
    for (auto& s : sizes)
      total += (s = 1 + static_cast<int>(rng() % 4));
    long expected = 0;
    for (auto [u, v] : g.edges())
      expected += static_cast<long>(sizes[u]) * sizes[v];
    auto h = blow_up(g, sizes);
    CHECK(h.order() == total);
    CHECK(h.size() == expected);
  }
}

TEST_CASE("graph6 known strings") {
  CHECK(graph6_encode(Graph::empty(5)) == "D??");
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  auto c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(graph6_encode(c5) == "Dhc");
  CHECK(oracle::decode_graph6("Dhc") == c5);
  CHECK(graph6_encode(Graph::empty(0)) == "?");
  CHECK(graph6_decode("Dhc\n") == c5);
  CHECK(graph6_decode(">>graph6<<Dhc") == c5);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), Error);
  CHECK_THROWS_AS(graph6_decode("D?"), Error);       // short body
  CHECK_THROWS_AS(graph6_decode("D???"), Error);     // long body
  CHECK_THROWS_AS(graph6_decode("A`"), Error);       // nonzero padding
  CHECK_THROWS_AS(graph6_decode("D\x20?"), Error);   // byte below 63
  CHECK_THROWS_AS(graph6_decode("~??D??"), Error);   // long header for small n
  CHECK_THROWS_AS(graph6_decode("~?"), Error);       // truncated header
}

TEST_CASE("graph6 round trip, including the long header") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 7, 62, 63, 64, 100, 200}) {
    auto g = oracle::random_graph(rng, n, 0.2);
    auto text = graph6_encode(g);
    CHECK(graph6_decode(text) == g);
    CHECK(oracle::decode_graph6(text) == g);
    CHECK((n > 62) == (text[0] == '~'));
  }
}

TEST_CASE("are_isomorphic") {
  std::mt19937_64 rng(5);
  auto c5 = cycle_graph(5);
  CHECK(are_isomorphic(c5, relabel(c5, oracle::random_permutation(rng, 5))));

  auto two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), two_triangles));

  auto bc = bc_graph(2, 2);
  CHECK(are_isomorphic(bc, relabel(bc, oracle::random_permutation(rng, bc.order()))));
  CHECK_FALSE(are_isomorphic(bc, with_edge(bc, 5, 8)));

  CHECK(are_isomorphic(petersen_graph(), relabel(petersen_graph(), oracle::random_permutation(rng, 10))));
  CHECK_THROWS_AS(are_isomorphic(cycle_graph(65), cycle_graph(65)), Error);
}

TEST_CASE("canonical form is invariant under relabelling and matches brute force") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    auto g = oracle::random_graph(rng, n, 0.5);
    auto h = oracle::random_graph(rng, n, 0.5);
    auto c = canonicalize(g);
    CHECK(canonicalize(relabel(g, oracle::random_permutation(rng, n))).graph == c.graph);
    CHECK(canonicalize(c.graph).graph == c.graph);
    CHECK(are_isomorphic(g, h) == oracle::isomorphic(g, h));
    // labeling maps canonical positions back to input vertices
    for (auto [u, v] : c.graph.edges())
      CHECK(g.adjacent(c.labeling[u], c.labeling[v]));
  }
}

TEST_CASE("canonical form on larger regular graphs") {
  std::mt19937_64 rng(23);
  for (auto g : {balanced_cycle_blowup(7, 4), bc_graph(3, 2), complete_bipartite(8, 8), petersen_graph(),
                 turan_graph(20, 4), cycle_graph(64)}) {
    auto c = canonicalize(g).graph;
    for (int i = 0; i < 5; ++i)
      CHECK(canonicalize(relabel(g, oracle::random_permutation(rng, g.order()))).graph == c);
  }
}

TEST_CASE("orbits") {
  auto c = canonicalize(cycle_graph(6));
  for (int v = 0; v < 6; ++v)
    CHECK(c.orbit[v] == 0);
  // path 0-1-2-3: ends form one orbit, the middle another
  auto p = canonicalize(path_graph(4));
  CHECK(p.orbit[0] == p.orbit[3]);
  CHECK(p.orbit[1] == p.orbit[2]);
  CHECK(p.orbit[0] != p.orbit[1]);
  auto star = canonicalize(complete_bipartite(1, 5));
  CHECK(star.orbit[0] == 0);
  for (int v = 2; v <= 5; ++v)
    CHECK(star.orbit[v] == 1);
}

TEST_CASE("relabel and induced_subgraph") {
  auto p = path_graph(3); // 0-1-2
  std::vector<int> perm{2, 0, 1};
  auto r = relabel(p, perm);
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK_FALSE(r.adjacent(2, 1));

  std::vector<int> keep{4, 0, 1};
  auto h = induced_subgraph(cycle_graph(5), keep);
  CHECK(h.order() == 3);
  CHECK(h.size() == 2);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(1, 2));
}
