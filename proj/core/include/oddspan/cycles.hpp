#pragma once

#include "oddspan/family.hpp"
#include "oddspan/graph.hpp"

#include <optional>
#include <set>
#include <vector>

namespace oddspan {

/// A simple cycle given as its vertex sequence; the closing edge is implied.
struct Cycle
{
  std::vector<int> vertices;
  auto length() const -> int { return static_cast<int>(vertices.size()); }
};

/// Shortest odd cycle with a witness, or nullopt when g is bipartite. Runs a
/// BFS from every vertex over the bipartite double cover.
auto shortest_odd_cycle(const Graph& g) -> std::optional<Cycle>;

/// A cycle of exactly `length` vertices, if g has one. Exact search: cycles
/// live inside one biconnected block, each block is searched from its
/// smallest cycle vertex with a depth-bounded DFS pruned by parity-aware
/// distances back to the start. Exponential in the worst case.
auto has_cycle_of_length(const Graph& g, int length) -> std::optional<Cycle>;

/// A cycle of exactly `length` vertices passing through v.
auto has_cycle_through(const Graph& g, int length, int v) -> std::optional<Cycle>;

struct CycleSpectrum
{
  std::set<int> present;
  int cap = 0;

  auto odd() const -> std::set<int>;
  auto even() const -> std::set<int>;
};

/// Every L in 3..cap for which g contains C_L. cap is clamped to g.order().
auto cycle_spectrum(const Graph& g, int cap) -> CycleSpectrum;

struct FamilyCheck
{
  bool free = true;
  /// First violating cycle (smallest forbidden length present).
  std::optional<Cycle> witness;

  explicit operator bool() const { return free; }
};

auto is_family_free(const Graph& g, const OddFamily& fam) -> FamilyCheck;

} // namespace oddspan
