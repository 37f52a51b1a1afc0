#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace oddspan {

/// A nonempty set of forbidden odd cycle lengths, each at least 3.
class OddFamily
{
public:
  /// Throws Error if `lengths` is empty or holds an even length or one below 3.
  explicit OddFamily(std::set<int> lengths);

  /// Parses "3,7,19" (whitespace around entries allowed).
  static auto parse(std::string_view text) -> OddFamily;

  auto lengths() const -> const std::set<int>& { return _lengths; }
  auto contains(int length) const -> bool { return _lengths.contains(length); }
  auto longest() const -> int { return *_lengths.rbegin(); }
  auto to_string() const -> std::string;

  friend auto operator==(const OddFamily&, const OddFamily&) -> bool = default;

private:
  std::set<int> _lengths;
};

enum class Regime { prefix_complete, ell_dominant, k_dominant, tie };

auto to_string(Regime r) -> std::string;

/// Threshold coefficient num/den (coprime); the degree bound is (num/den)*n.
struct Threshold
{
  std::int64_t num = 0;
  std::int64_t den = 1;

  auto to_string() const -> std::string { return std::to_string(num) + "/" + std::to_string(den); }
  friend auto operator==(const Threshold&, const Threshold&) -> bool = default;
};

struct FamilyProfile
{
  /// C_{2ell+1} is the shortest odd cycle not in the family.
  int ell = 0;
  /// C_{2k+1} is the longest odd cycle in the family.
  int k = 0;
  Regime regime = Regime::tie;
};

auto family_profile(const OddFamily& fam) -> FamilyProfile;

/// Compares 1/(2(2ell+1)) with 2/(2k+3) exactly. Used by family_profile once
/// ell <= k; exposed so the unreachable tie branch can be exercised.
auto compare_terms(int ell, int k) -> Regime;

/// max{1/(2(2ell+1)), 2/(2k+3)} in lowest terms.
auto degree_threshold(const FamilyProfile& profile) -> Threshold;

/// {3, 5, ..., 2ell-1} together with 2k+1.
auto reduced_family(const FamilyProfile& profile) -> OddFamily;

} // namespace oddspan
