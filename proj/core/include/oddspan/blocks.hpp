#pragma once

#include "oddspan/graph.hpp"

#include <vector>

namespace oddspan {

/// Biconnected components. Bridges form two-vertex blocks; isolated vertices
/// belong to no block.
struct BlockDecomposition
{
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

auto block_decomposition(const Graph& g) -> BlockDecomposition;

} // namespace oddspan
