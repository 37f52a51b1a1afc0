#pragma once

#include "oddspan/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oddspan {

struct DenseCore
{
  /// Induced subgraph on `vertices`, relabelled in ascending order.
  Graph graph;
  std::vector<int> vertices;
};

/**
 * Repeatedly deletes, in ascending vertex order, any vertex whose current
 * degree d satisfies d * n(G) < e(G), with n(G) and e(G) fixed from the input.
 * The survivor is nonempty and has minimum degree at least e(G)/n(G).
 * Throws Error on an edgeless graph.
 */
auto min_degree_subgraph(const Graph& g) -> DenseCore;

inline constexpr int kMaxLongestPathVertices = 20;

/// Maximum number of vertices on a simple path. Exact bitmask DP over
/// (visited set, endpoint); n <= 20.
auto longest_path_order(const Graph& g) -> int;

/// (longest path order <= k) implies 2 e(G) <= (k-1) n(G).
auto erdos_gallai_holds(const Graph& g, int k) -> bool;

enum class Side { x, y };

/// Request for a path of `order` vertices alternating between the sides of
/// the bipartite pair (x_side, y_side), using only x-y edges of `host`.
struct PathRequest
{
  const Graph* host = nullptr;
  VertexSet x_side;
  VertexSet y_side;
  int order = 1;
  Side end_a = Side::x;
  Side end_b = Side::x;
};

/// Throws Error on a parity violation (equal end sides need an odd order,
/// different end sides an even order). Tries a lowest-index greedy extension
/// from every start, then falls back to exhaustive backtracking bounded by
/// `node_budget` search nodes.
auto greedy_bipartite_path(const PathRequest& req, std::int64_t node_budget = 50'000'000)
    -> std::optional<std::vector<int>>;

struct CycleBlowupShape
{
  int m = 0;
  /// Part sizes in cyclic order, starting from the part holding vertex 0 and
  /// continuing towards the neighbouring part with the smaller least vertex.
  std::vector<int> sizes;
  /// parts[i] lists the vertices of part i.
  std::vector<std::vector<int>> parts;

  friend auto operator==(const CycleBlowupShape& a, const CycleBlowupShape& b) -> bool {
    return a.m == b.m && a.sizes == b.sizes;
  }
};

/// Succeeds iff g is a blow-up of C_m with m >= 5: classes of equal open
/// neighbourhoods must form a cycle in the quotient.
auto recognize_cycle_blowup(const Graph& g) -> std::optional<CycleBlowupShape>;

struct BcShape
{
  int ell = 0;
  int t = 0;
  friend auto operator==(const BcShape&, const BcShape&) -> bool = default;
};

/// Succeeds iff g is 2ell+1 blocks K_{t,t}, each holding exactly one cut
/// vertex, whose cut vertices form an induced (2ell+1)-cycle block.
auto recognize_bc_graph(const Graph& g) -> std::optional<BcShape>;

} // namespace oddspan
