#pragma once

#include "oddspan/family.hpp"
#include "oddspan/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oddspan {

struct ExtremalMatch
{
  std::string graph6;
  Verdict kind = Verdict::extremal_match_bc;
};

struct Counterexample
{
  std::string graph6;
  int min_degree = 0;
  /// "strict" (delta above the bound) or "equality" (at the bound, not extremal).
  std::string slice;
};

struct SamplerStats
{
  std::int64_t trials = 0;
  std::int64_t rejected_degree = 0;
  std::int64_t rejected_family = 0;
  std::int64_t accepted = 0;
};

struct VerificationReport
{
  OddFamily family{{3}};
  FamilyProfile profile;
  Threshold threshold;
  int n = 0;
  std::string mode; // "exhaustive" or "random"

  /// Family-free graphs with delta * den >= num * n.
  std::int64_t candidates_examined = 0;
  std::int64_t strict_candidates = 0;
  std::int64_t equality_candidates = 0;
  std::int64_t bipartite_candidates = 0;

  std::vector<Counterexample> counterexamples;
  std::int64_t counterexample_total = 0;
  std::vector<ExtremalMatch> extremal_matches;

  /// n is below the 1000 k^8 bound the general result is stated for.
  bool below_proven_range = false;
  /// Counterexample to a statement with no lower bound on n (prefix-complete families).
  bool suite_failure = false;

  std::optional<std::uint64_t> seed;
  std::optional<SamplerStats> sampler;
  double elapsed_seconds = 0.0;
};

/// Smallest minimum degree meeting the bound with equality allowed: ceil(num*n/den).
auto degree_floor(const Threshold& threshold, int n) -> int;

/// Every family-free graph on n <= 10 vertices at or above the degree bound,
/// classified. Counterexamples are listed in sorted graph6 order.
auto verify_theorem_exhaustive(const OddFamily& fam, int n, int threads = 0) -> VerificationReport;

/**
 * Seeded search near the degree bound. Trial i draws from its own generator
 * seeded by (seed, i), alternating between a dense bipartite graph plus a few
 * noise edges and a perturbed, relabelled blow-up of one of the extremal
 * shapes. Trials below the degree bound or containing a forbidden cycle are
 * discarded; the rest are classified. Output is identical for any thread count.
 */
auto random_counterexample_search(const OddFamily& fam, int n, std::int64_t trials, std::uint64_t seed,
                                  int threads = 0) -> VerificationReport;

/// Serializes with "schema": 1. Only "elapsed" depends on timing.
auto report_to_json(const VerificationReport& report) -> std::string;

} // namespace oddspan
