#pragma once

#include "oddspan/family.hpp"
#include "oddspan/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oddspan {

inline constexpr int kMaxEnumerationVertices = 10;

struct EnumSpec
{
  int n = 0;
  std::optional<int> min_degree_at_least;
  /// Only graphs containing no cycle whose length is in this family.
  std::optional<OddFamily> exclude;
  /// Worker threads; 0 means ODDSPAN_THREADS or the hardware concurrency.
  int threads = 0;
};

/// Worker count: ODDSPAN_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
auto default_thread_count() -> int;

/**
 * Emits one canonically labelled representative of every isomorphism class
 * of graphs on spec.n vertices satisfying the filters, by canonical
 * augmentation: a graph on j+1 vertices is accepted as a child of its parent
 * only if the added vertex lies in the automorphism orbit of the last
 * minimum-degree vertex in canonical order.
 *
 * Family-freeness is hereditary and is enforced at every level. The
 * minimum-degree filter is applied at the last level, with the prune that a
 * vertex at level j can still gain at most n-j neighbours.
 *
 * The sink sees graphs in the same order for any thread count. Returns the
 * number of graphs emitted. Throws Error if n exceeds 10.
 */
auto enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& sink) -> std::int64_t;

auto collect_graphs(const EnumSpec& spec) -> std::vector<Graph>;

} // namespace oddspan
