#pragma once

#include "oddspan/cycles.hpp"
#include "oddspan/family.hpp"
#include "oddspan/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oddspan {

enum class Verdict {
  /// G contains a forbidden cycle.
  not_applicable,
  /// Family-free, non-bipartite, minimum degree strictly below the bound.
  below_threshold,
  bipartite_consistent,
  extremal_match_bc,
  extremal_match_blowup,
  /// Family-free and non-bipartite with delta above the bound, or at the
  /// bound without being the designated extremal graph.
  counterexample,
};

auto to_string(Verdict v) -> std::string;

/// Graph the equality case must coincide with: BC_{2ell+1}(n) when the
/// 1/(2(2ell+1)) term dominates, C_{2k+3}(n/(2k+3)) otherwise.
enum class ExtremalKind { bc, cycle_blowup };

auto designated_extremal(const FamilyProfile& profile) -> ExtremalKind;

struct TheoremCheck
{
  Verdict verdict = Verdict::bipartite_consistent;
  FamilyProfile profile;
  Threshold threshold;
  int min_degree = 0;
  /// delta * den == num * n.
  bool equality = false;
  /// delta * den > num * n.
  bool strict = false;
  /// Forbidden cycle (not_applicable) or shortest odd cycle (non-bipartite).
  std::optional<Cycle> witness;
  /// Verdict for {C_3, ..., C_{2ell-1}; C_{2k+1}} when that differs from the family.
  std::optional<Verdict> reduced_verdict;
};

/// Classifies g against the minimum-degree bipartiteness bound for `fam`,
/// using exact integer comparisons delta * den vs num * n.
auto check_graph_against_theorem(const Graph& g, const OddFamily& fam) -> TheoremCheck;

/// Same, with family-freeness already established by the caller.
auto classify_family_free(const Graph& g, const FamilyProfile& profile) -> TheoremCheck;

} // namespace oddspan
