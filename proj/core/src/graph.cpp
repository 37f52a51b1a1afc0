#include "oddspan/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace oddspan {

GraphBuilder::GraphBuilder(int n) {
  if (n < 0 || n > kMaxVertices)
    throw Error("vertex count " + std::to_string(n) + " outside [0, 512]");
  _g._n = n;
  _g._words = (n + 63) / 64;
  _g._bits.assign(static_cast<std::size_t>(n) * _g._words, 0);
}

auto GraphBuilder::check(int u, int v) const -> void {
  if (u < 0 || v < 0 || u >= _g._n || v >= _g._n)
    throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
  if (u == v)
    throw Error("self-loop at vertex " + std::to_string(u));
}

auto GraphBuilder::flip(int u, int v, bool on) -> void {
  auto bit = [&](int a, int b) -> std::uint64_t& {
    return _g._bits[static_cast<std::size_t>(a) * _g._words + (b >> 6)];
  };
  std::uint64_t mu = std::uint64_t{1} << (v & 63);
  std::uint64_t mv = std::uint64_t{1} << (u & 63);
  if (on) {
    bit(u, v) |= mu;
    bit(v, u) |= mv;
  } else {
    bit(u, v) &= ~mu;
    bit(v, u) &= ~mv;
  }
}

auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder& {
  check(u, v);
  flip(u, v, true);
  return *this;
}

auto GraphBuilder::remove_edge(int u, int v) -> GraphBuilder& {
  check(u, v);
  flip(u, v, false);
  return *this;
}

auto GraphBuilder::build() && -> Graph {
  int twice = 0;
  for (auto w : _g._bits)
    twice += std::popcount(w);
  _g._m = twice / 2;
  return std::move(_g);
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph {
  GraphBuilder b(n);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return std::move(b).build();
}

auto Graph::empty(int n) -> Graph { return std::move(GraphBuilder(n)).build(); }

auto Graph::degree(int v) const -> int {
  int d = 0;
  for (auto w : row(v))
    d += std::popcount(w);
  return d;
}

auto Graph::degrees() const -> std::vector<int> {
  std::vector<int> d(_n);
  for (int v = 0; v < _n; ++v)
    d[v] = degree(v);
  return d;
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  out.reserve(_m);
  for (int u = 0; u < _n; ++u) {
    auto nb = neighbors(u);
    for (int v = nb.next(u); v >= 0; v = nb.next(v))
      out.emplace_back(u, v);
  }
  return out;
}

auto graph_from_edges(int n, std::span<const Edge> edges) -> Graph { return Graph::from_edges(n, edges); }

auto min_degree(const Graph& g) -> int {
  if (g.order() == 0)
    throw Error("min_degree of the null graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v)
    best = std::min(best, g.degree(v));
  return best;
}

auto max_degree(const Graph& g) -> int {
  int best = 0;
  for (int v = 0; v < g.order(); ++v)
    best = std::max(best, g.degree(v));
  return best;
}

auto is_bipartite(const Graph& g) -> BipartiteCheck {
  const int n = g.order();
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0), queue;
  queue.reserve(n);

  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0)
      continue;
    side[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      auto nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Same BFS layer: the two tree paths meet at their lowest common
          // ancestor and close a simple odd cycle with the edge uw.
          std::vector<int> left{u}, right{w};
          int a = u, b = w;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            if (a != b)
              right.push_back(b);
          }
          std::vector<int> cycle(left.begin(), left.end());
          cycle.insert(cycle.end(), right.rbegin(), right.rend());
          return BipartiteCheck{std::nullopt, std::move(cycle)};
        }
      }
    }
  }

  Bipartition parts;
  for (int v = 0; v < n; ++v)
    (side[v] == 0 ? parts.part_a : parts.part_b).push_back(v);
  return BipartiteCheck{std::move(parts), {}};
}

auto blow_up(const Graph& g, std::span<const int> sizes) -> Graph {
  if (static_cast<int>(sizes.size()) != g.order())
    throw Error("blow_up: size list length " + std::to_string(sizes.size()) + " != vertex count " +
                std::to_string(g.order()));
  std::vector<int> offset(g.order() + 1, 0);
  for (int v = 0; v < g.order(); ++v) {
    if (sizes[v] < 1)
      throw Error("blow_up: part sizes must be positive");
    offset[v + 1] = offset[v] + sizes[v];
  }
  GraphBuilder b(offset.back());
  for (auto [u, v] : g.edges())
    for (int x = offset[u]; x < offset[u + 1]; ++x)
      for (int y = offset[v]; y < offset[v + 1]; ++y)
        b.add_edge(x, y);
  return std::move(b).build();
}

auto induced_subgraph(const Graph& g, std::span<const int> vertices) -> Graph {
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        b.add_edge(i, j);
  return std::move(b).build();
}

auto relabel(const Graph& g, std::span<const int> perm) -> Graph {
  if (static_cast<int>(perm.size()) != g.order())
    throw Error("relabel: permutation length mismatch");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges())
    b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

auto disjoint_union(const Graph& a, const Graph& c) -> Graph {
  GraphBuilder b(a.order() + c.order());
  for (auto [u, v] : a.edges())
    b.add_edge(u, v);
  for (auto [u, v] : c.edges())
    b.add_edge(u + a.order(), v + a.order());
  return std::move(b).build();
}

auto with_edge(const Graph& g, int u, int v) -> Graph {
  GraphBuilder b(g.order());
  for (auto [x, y] : g.edges())
    b.add_edge(x, y);
  b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

auto distinct_in_range(const Graph& g, std::span<const int> seq) -> bool {
  std::vector<char> seen(g.order(), 0);
  for (int v : seq) {
    if (v < 0 || v >= g.order() || seen[v])
      return false;
    seen[v] = 1;
  }
  return true;
}

} // namespace

auto is_cycle_of(const Graph& g, std::span<const int> cycle) -> bool {
  if (cycle.size() < 3 || !distinct_in_range(g, cycle))
    return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
      return false;
  return true;
}

auto is_path_of(const Graph& g, std::span<const int> path) -> bool {
  if (path.empty() || !distinct_in_range(g, path))
    return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adjacent(path[i], path[i + 1]))
      return false;
  return true;
}

} // namespace oddspan
