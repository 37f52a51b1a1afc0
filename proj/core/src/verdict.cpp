#include "oddspan/verdict.hpp"
#include "oddspan/proof_kit.hpp"

#include <algorithm>

namespace oddspan {

auto to_string(Verdict v) -> std::string {
  switch (v) {
  case Verdict::not_applicable:
    return "not-applicable";
  case Verdict::below_threshold:
    return "below-threshold";
  case Verdict::bipartite_consistent:
    return "bipartite-consistent";
  case Verdict::extremal_match_bc:
    return "extremal-match-BC";
  case Verdict::extremal_match_blowup:
    return "extremal-match-blowup";
  case Verdict::counterexample:
    return "COUNTEREXAMPLE";
  }
  return "?";
}

auto designated_extremal(const FamilyProfile& profile) -> ExtremalKind {
  return profile.regime == Regime::ell_dominant ? ExtremalKind::bc : ExtremalKind::cycle_blowup;
}

namespace {

auto matches_designated(const Graph& g, const FamilyProfile& p) -> std::optional<Verdict> {
  const int n = g.order();
  if (designated_extremal(p) == ExtremalKind::bc) {
    const int block = 2 * (2 * p.ell + 1);
    if (n % block != 0)
      return std::nullopt;
    auto shape = recognize_bc_graph(g);
    if (shape && shape->ell == p.ell && shape->t == n / block)
      return Verdict::extremal_match_bc;
    return std::nullopt;
  }
  const int m = 2 * p.k + 3;
  if (n % m != 0)
    return std::nullopt;
  auto shape = recognize_cycle_blowup(g);
  if (shape && shape->m == m &&
      std::all_of(shape->sizes.begin(), shape->sizes.end(), [&](int s) { return s == n / m; }))
    return Verdict::extremal_match_blowup;
  return std::nullopt;
}

} // namespace

auto classify_family_free(const Graph& g, const FamilyProfile& profile) -> TheoremCheck {
  TheoremCheck out;
  out.profile = profile;
  out.threshold = degree_threshold(profile);
  if (g.order() == 0)
    return out;

  out.min_degree = min_degree(g);
  const std::int64_t lhs = static_cast<std::int64_t>(out.min_degree) * out.threshold.den;
  const std::int64_t rhs = out.threshold.num * g.order();
  out.equality = lhs == rhs;
  out.strict = lhs > rhs;

  auto odd = shortest_odd_cycle(g);
  if (!odd) {
    out.verdict = Verdict::bipartite_consistent;
    return out;
  }
  out.witness = std::move(odd);
  if (lhs < rhs)
    out.verdict = Verdict::below_threshold;
  else if (lhs > rhs)
    out.verdict = Verdict::counterexample;
  else
    out.verdict = matches_designated(g, profile).value_or(Verdict::counterexample);
  return out;
}

auto check_graph_against_theorem(const Graph& g, const OddFamily& fam) -> TheoremCheck {
  const auto profile = family_profile(fam);
  auto classify = [&](const OddFamily& f) {
    auto free = is_family_free(g, f);
    if (!free) {
      TheoremCheck out;
      out.profile = profile;
      out.threshold = degree_threshold(profile);
      out.min_degree = g.order() > 0 ? min_degree(g) : 0;
      out.verdict = Verdict::not_applicable;
      out.witness = std::move(free.witness);
      return out;
    }
    return classify_family_free(g, profile);
  };

  TheoremCheck out = classify(fam);
  const auto reduced = reduced_family(profile);
  if (!(reduced == fam))
    out.reduced_verdict = classify(reduced).verdict;
  return out;
}

} // namespace oddspan
