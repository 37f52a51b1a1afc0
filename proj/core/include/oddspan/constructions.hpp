#pragma once

#include "oddspan/graph.hpp"

#include <string>
#include <vector>

namespace oddspan {

/// Complete r-partite graph on n vertices with part sizes floor(n/r) or ceil(n/r).
/// Larger parts come first.
auto turan_graph(int n, int r) -> Graph;
auto turan_part_sizes(int n, int r) -> std::vector<int>;

/// K_{a,b}; the a-side is 0..a-1.
auto complete_bipartite(int a, int b) -> Graph;
auto cycle_graph(int m) -> Graph;
auto path_graph(int p) -> Graph;
auto complete_graph(int p) -> Graph;
auto petersen_graph() -> Graph;

/// Blow-up of C_m with every part an independent set of size t. Part i holds
/// vertices i*t .. i*t+t-1.
auto balanced_cycle_blowup(int m, int t) -> Graph;

/**
 * 2*ell+1 disjoint copies of K_{t,t}, one selected vertex per copy, the
 * selected vertices joined in a cycle of length 2*ell+1.
 *
 * Numbering: spine vertices 0..2ell first (in cyclic order), then each copy's
 * remaining 2t-1 vertices in copy order. In copy i the spine vertex sits on the
 * first side; the copy's other first-side vertices follow, then its t
 * second-side vertices.
 */
auto bc_graph(int ell, int t) -> Graph;

/// Three disjoint K_{t,t} with one selected vertex each, selected vertices
/// pairwise adjacent. Same numbering as bc_graph(1, t).
auto haggkvist_graph(int t) -> Graph;

/// Wrappers taking the total vertex count; throw unless the divisibility
/// the construction needs holds.
auto bc_graph_n(int ell, int n) -> Graph;
auto balanced_cycle_blowup_n(int m, int n) -> Graph;

/// Parameters for one named construction.
struct ConstructionSpec
{
  enum class Kind { turan, complete_bipartite, cycle, cycle_blowup, bc, haggkvist };

  Kind kind = Kind::cycle;
  int n = 0;   // turan
  int r = 0;   // turan
  int a = 0;   // complete_bipartite
  int b = 0;   // complete_bipartite
  int m = 0;   // cycle, cycle_blowup
  int t = 0;   // cycle_blowup, bc, haggkvist
  int ell = 0; // bc
};

/// Parses the CLI names turan|kab|cycle|blowup|bc|haggkvist.
auto parse_construction_kind(const std::string& name) -> ConstructionSpec::Kind;

/// Validates the parameters for spec.kind and builds the graph.
auto build(const ConstructionSpec& spec) -> Graph;

} // namespace oddspan
