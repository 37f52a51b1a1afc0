#pragma once

#include "oddspan/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddspan {

/// Raised on precondition violations (bad vertex index, size cap, malformed input).
class Error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/**
 * Immutable simple undirected graph on vertices 0..n-1, n <= 512.
 *
 * Adjacency is stored as one bit row per vertex, ceil(n/64) words each.
 * Values are never mutated after construction, so they can be shared freely
 * between threads.
 */
class Graph
{
public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
  /// collapse; self-loops and out-of-range endpoints throw Error.
  static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
  static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Empty graph on n vertices.
  static auto empty(int n) -> Graph;

  auto order() const -> int { return _n; }
  auto size() const -> int { return _m; }

  auto adjacent(int u, int v) const -> bool {
    return (_bits[static_cast<std::size_t>(u) * _words + (v >> 6)] >> (v & 63)) & 1U;
  }

  auto row(int v) const -> std::span<const std::uint64_t> {
    return {_bits.data() + static_cast<std::size_t>(v) * _words, static_cast<std::size_t>(_words)};
  }

  auto neighbors(int v) const -> VertexSet { return VertexSet::from_words(row(v)); }
  auto degree(int v) const -> int;
  auto degrees() const -> std::vector<int>;

  /// Edges (u, v) with u < v in lexicographic order.
  auto edges() const -> std::vector<Edge>;

  /// Row word for vertex v when order() <= 64.
  auto row64(int v) const -> std::uint64_t { return _bits[static_cast<std::size_t>(v) * _words]; }

  friend auto operator==(const Graph& a, const Graph& b) -> bool {
    return a._n == b._n && a._bits == b._bits;
  }

private:
  friend class GraphBuilder;

  int _n = 0;
  int _m = 0;
  int _words = 0;
  std::vector<std::uint64_t> _bits;
};

/// Mutable staging area for a Graph. build() moves the rows into an immutable value.
class GraphBuilder
{
public:
  explicit GraphBuilder(int n);

  auto order() const -> int { return _g._n; }
  auto add_edge(int u, int v) -> GraphBuilder&;
  auto remove_edge(int u, int v) -> GraphBuilder&;
  auto adjacent(int u, int v) const -> bool { return _g.adjacent(u, v); }
  auto build() && -> Graph;

private:
  auto check(int u, int v) const -> void;
  auto flip(int u, int v, bool on) -> void;

  Graph _g;
};

/// Witness that a graph is bipartite: every edge joins part_a and part_b.
struct Bipartition
{
  std::vector<int> part_a;
  std::vector<int> part_b;
};

struct BipartiteCheck
{
  std::optional<Bipartition> bipartition;
  /// Simple odd cycle as a vertex sequence (closing edge implied) when not bipartite.
  std::vector<int> odd_cycle;

  explicit operator bool() const { return bipartition.has_value(); }
};

auto graph_from_edges(int n, std::span<const Edge> edges) -> Graph;

/// Minimum degree; throws on the null graph.
auto min_degree(const Graph& g) -> int;
auto max_degree(const Graph& g) -> int;

auto is_bipartite(const Graph& g) -> BipartiteCheck;

/// Replaces each vertex v by an independent set of sizes[v] vertices and each
/// edge by a complete bipartite join. Blocks are numbered consecutively in vertex order.
auto blow_up(const Graph& g, std::span<const int> sizes) -> Graph;

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
auto induced_subgraph(const Graph& g, std::span<const int> vertices) -> Graph;

/// Graph h with h.adjacent(perm[u], perm[v]) iff g.adjacent(u, v).
auto relabel(const Graph& g, std::span<const int> perm) -> Graph;

auto disjoint_union(const Graph& a, const Graph& b) -> Graph;

/// g with edge (u, v) added (no-op if present).
auto with_edge(const Graph& g, int u, int v) -> Graph;

/// Checks that `cycle` is a simple cycle of g (consecutive and closing pairs adjacent).
auto is_cycle_of(const Graph& g, std::span<const int> cycle) -> bool;

/// Checks that `path` is a simple path of g.
auto is_path_of(const Graph& g, std::span<const int> path) -> bool;

} // namespace oddspan
