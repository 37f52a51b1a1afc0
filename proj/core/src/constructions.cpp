#include "oddspan/constructions.hpp"

namespace oddspan {
namespace {

auto require(bool ok, const std::string& what) -> void {
  if (!ok)
    throw Error(what);
}

} // namespace

auto turan_part_sizes(int n, int r) -> std::vector<int> {
  require(n >= 1 && r >= 1, "turan_graph: need n >= 1 and r >= 1");
  require(r <= n, "turan_graph: r = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i)
    ++sizes[i];
  return sizes;
}

auto turan_graph(int n, int r) -> Graph {
  auto sizes = turan_part_sizes(n, r);
  return blow_up(complete_graph(r), sizes);
}

auto complete_bipartite(int a, int b) -> Graph {
  require(a >= 1 && b >= 1, "complete_bipartite: sides must be positive");
  GraphBuilder g(a + b);
  for (int x = 0; x < a; ++x)
    for (int y = a; y < a + b; ++y)
      g.add_edge(x, y);
  return std::move(g).build();
}

auto cycle_graph(int m) -> Graph {
  require(m >= 3, "cycle_graph: length must be at least 3");
  GraphBuilder g(m);
  for (int i = 0; i < m; ++i)
    g.add_edge(i, (i + 1) % m);
  return std::move(g).build();
}

auto path_graph(int p) -> Graph {
  require(p >= 1, "path_graph: need at least one vertex");
  GraphBuilder g(p);
  for (int i = 0; i + 1 < p; ++i)
    g.add_edge(i, i + 1);
  return std::move(g).build();
}

auto complete_graph(int p) -> Graph {
  require(p >= 1, "complete_graph: need at least one vertex");
  GraphBuilder g(p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      g.add_edge(i, j);
  return std::move(g).build();
}

auto petersen_graph() -> Graph {
  GraphBuilder g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);         // outer 5-cycle
    g.add_edge(i, i + 5);               // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return std::move(g).build();
}

auto balanced_cycle_blowup(int m, int t) -> Graph {
  require(t >= 1, "balanced_cycle_blowup: part size must be positive");
  std::vector<int> sizes(m, t);
  return blow_up(cycle_graph(m), sizes);
}

auto bc_graph(int ell, int t) -> Graph {
  require(ell >= 1 && t >= 1, "bc_graph: need ell >= 1 and t >= 1");
  const int spine = 2 * ell + 1;
  const int n = 2 * spine * t;
  require(n <= kMaxVertices, "bc_graph: vertex count exceeds 512");
  GraphBuilder g(n);
  for (int i = 0; i < spine; ++i)
    g.add_edge(i, (i + 1) % spine);

  int next = spine;
  for (int i = 0; i < spine; ++i) {
    std::vector<int> first{i};
    for (int j = 1; j < t; ++j)
      first.push_back(next++);
    std::vector<int> second;
    for (int j = 0; j < t; ++j)
      second.push_back(next++);
    for (int x : first)
      for (int y : second)
        g.add_edge(x, y);
  }
  return std::move(g).build();
}

auto haggkvist_graph(int t) -> Graph { return bc_graph(1, t); }

auto bc_graph_n(int ell, int n) -> Graph {
  require(ell >= 1, "bc_graph: need ell >= 1");
  const int block = 2 * (2 * ell + 1);
  require(n >= block && n % block == 0,
          "bc_graph: n = " + std::to_string(n) + " is not a positive multiple of " + std::to_string(block));
  return bc_graph(ell, n / block);
}

auto balanced_cycle_blowup_n(int m, int n) -> Graph {
  require(m >= 3, "balanced_cycle_blowup: cycle length must be at least 3");
  require(n >= m && n % m == 0,
          "balanced_cycle_blowup: n = " + std::to_string(n) + " is not a positive multiple of " + std::to_string(m));
  return balanced_cycle_blowup(m, n / m);
}

auto parse_construction_kind(const std::string& name) -> ConstructionSpec::Kind {
  using K = ConstructionSpec::Kind;
  if (name == "turan")
    return K::turan;
  if (name == "kab")
    return K::complete_bipartite;
  if (name == "cycle")
    return K::cycle;
  if (name == "blowup")
    return K::cycle_blowup;
  if (name == "bc")
    return K::bc;
  if (name == "haggkvist")
    return K::haggkvist;
  throw Error("unknown construction type '" + name + "'");
}

auto build(const ConstructionSpec& s) -> Graph {
  using K = ConstructionSpec::Kind;
  switch (s.kind) {
  case K::turan:
    return turan_graph(s.n, s.r);
  case K::complete_bipartite:
    return complete_bipartite(s.a, s.b);
  case K::cycle:
    return cycle_graph(s.m);
  case K::cycle_blowup:
    if (s.t == 0 && s.n > 0)
      return balanced_cycle_blowup_n(s.m, s.n);
    require(s.m >= 3, "balanced_cycle_blowup: cycle length must be at least 3");
    return balanced_cycle_blowup(s.m, s.t);
  case K::bc:
    if (s.t == 0 && s.n > 0)
      return bc_graph_n(s.ell, s.n);
    return bc_graph(s.ell, s.t);
  case K::haggkvist:
    if (s.t == 0 && s.n > 0) {
      require(s.n % 6 == 0, "haggkvist_graph: n must be a positive multiple of 6");
      return haggkvist_graph(s.n / 6);
    }
    require(s.t >= 1, "haggkvist_graph: part size must be positive");
    return haggkvist_graph(s.t);
  }
  throw Error("unhandled construction kind");
}

} // namespace oddspan
