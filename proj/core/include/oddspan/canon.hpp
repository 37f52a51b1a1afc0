#pragma once

#include "oddspan/graph.hpp"

#include <vector>

namespace oddspan {

inline constexpr int kMaxCanonVertices = 64;

/**
 * Canonical labelling of a graph with at most 64 vertices.
 *
 * The search refines the unit partition to an equitable one, individualizes a
 * vertex of the first smallest non-singleton cell, and recurses. Leaves are
 * compared by their relabelled adjacency rows; the lexicographically largest
 * leaf is the canonical form. Leaves equal to the current best yield
 * automorphisms, which prune sibling branches lying in one orbit of the
 * pointwise stabilizer of the branch prefix.
 */
struct Canonical
{
  /// Relabelled graph; equal for two inputs iff they are isomorphic.
  Graph graph;
  /// labeling[i] is the input vertex placed at canonical position i.
  std::vector<int> labeling;
  /// orbit[v] is the smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
  /// Number of automorphism generators found during the search.
  int generators = 0;
};

auto canonicalize(const Graph& g) -> Canonical;

/// Throws Error if either graph has more than 64 vertices.
auto are_isomorphic(const Graph& a, const Graph& b) -> bool;

} // namespace oddspan
