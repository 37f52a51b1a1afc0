#include "oddspan/family.hpp"
#include "oddspan/graph.hpp"

#include <charconv>
#include <numeric>

namespace oddspan {

OddFamily::OddFamily(std::set<int> lengths) : _lengths(std::move(lengths)) {
  if (_lengths.empty())
    throw Error("odd cycle family must be nonempty");
  for (int L : _lengths)
    if (L < 3 || L % 2 == 0)
      throw Error("family length " + std::to_string(L) + " is not an odd integer >= 3");
}

auto OddFamily::parse(std::string_view text) -> OddFamily {
  std::set<int> lengths;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw Error("cannot parse family entry '" + std::string(item) + "'");
    lengths.insert(value);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return OddFamily(std::move(lengths));
}

auto OddFamily::to_string() const -> std::string {
  std::string out;
  for (int L : _lengths) {
    if (!out.empty())
      out += ',';
    out += std::to_string(L);
  }
  return out;
}

auto to_string(Regime r) -> std::string {
  switch (r) {
  case Regime::prefix_complete:
    return "prefix-complete";
  case Regime::ell_dominant:
    return "ell-dominant";
  case Regime::k_dominant:
    return "k-dominant";
  case Regime::tie:
    return "tie";
  }
  return "?";
}

auto compare_terms(int ell, int k) -> Regime {
  // 1/(2(2ell+1)) vs 2/(2k+3)  <=>  (2k+3) vs 4(2ell+1)
  const std::int64_t lhs = 2 * static_cast<std::int64_t>(k) + 3;
  const std::int64_t rhs = 4 * (2 * static_cast<std::int64_t>(ell) + 1);
  if (lhs > rhs)
    return Regime::ell_dominant;
  if (lhs < rhs)
    return Regime::k_dominant;
  return Regime::tie;
}

auto family_profile(const OddFamily& fam) -> FamilyProfile {
  FamilyProfile p;
  p.ell = 1;
  while (fam.contains(2 * p.ell + 1))
    ++p.ell;
  p.k = (fam.longest() - 1) / 2;
  p.regime = p.ell > p.k ? Regime::prefix_complete : compare_terms(p.ell, p.k);
  return p;
}

auto degree_threshold(const FamilyProfile& p) -> Threshold {
  std::int64_t num = 0, den = 1;
  switch (p.regime) {
  case Regime::ell_dominant:
    num = 1;
    den = 2 * (2 * static_cast<std::int64_t>(p.ell) + 1);
    break;
  case Regime::prefix_complete:
  case Regime::k_dominant:
  case Regime::tie:
    num = 2;
    den = 2 * static_cast<std::int64_t>(p.k) + 3;
    break;
  }
  auto g = std::gcd(num, den);
  return Threshold{num / g, den / g};
}

auto reduced_family(const FamilyProfile& p) -> OddFamily {
  std::set<int> lengths;
  for (int j = 1; j < p.ell && 2 * j + 1 <= 2 * p.k + 1; ++j)
    lengths.insert(2 * j + 1);
  lengths.insert(2 * p.k + 1);
  return OddFamily(std::move(lengths));
}

} // namespace oddspan
