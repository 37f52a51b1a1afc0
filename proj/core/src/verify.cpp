#include "oddspan/verify.hpp"
#include "oddspan/constructions.hpp"
#include "oddspan/cycles.hpp"
#include "oddspan/enumerate.hpp"
#include "oddspan/graph6.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace oddspan {
namespace {

constexpr std::size_t kListedCounterexamples = 100;

auto n_below_proven_range(int k, int n) -> bool {
  // 1000 k^8 > n, in long double to stay clear of overflow.
  long double bound = 1000.0L * std::pow(static_cast<long double>(k), 8);
  return static_cast<long double>(n) < bound;
}

auto new_report(const OddFamily& fam, int n, std::string mode) -> VerificationReport {
  VerificationReport r;
  r.family = fam;
  r.profile = family_profile(fam);
  r.threshold = degree_threshold(r.profile);
  r.n = n;
  r.mode = std::move(mode);
  r.below_proven_range = r.profile.regime != Regime::prefix_complete && n_below_proven_range(r.profile.k, n);
  return r;
}

/// Folds one classified candidate into the report.
auto record(VerificationReport& r, const Graph& g, const TheoremCheck& check) -> void {
  ++r.candidates_examined;
  if (check.strict)
    ++r.strict_candidates;
  if (check.equality)
    ++r.equality_candidates;
  switch (check.verdict) {
  case Verdict::bipartite_consistent:
    ++r.bipartite_candidates;
    break;
  case Verdict::extremal_match_bc:
  case Verdict::extremal_match_blowup:
    r.extremal_matches.push_back({graph6_encode(g), check.verdict});
    break;
  case Verdict::counterexample:
    ++r.counterexample_total;
    r.counterexamples.push_back({graph6_encode(g), check.min_degree, check.strict ? "strict" : "equality"});
    break;
  default:
    break;
  }
}

auto finish(VerificationReport& r) -> void {
  r.suite_failure = r.profile.regime == Regime::prefix_complete && r.counterexample_total > 0;
}

} // namespace

auto degree_floor(const Threshold& t, int n) -> int {
  const std::int64_t num = t.num * n;
  return static_cast<int>((num + t.den - 1) / t.den);
}

auto verify_theorem_exhaustive(const OddFamily& fam, int n, int threads) -> VerificationReport {
  if (n < 1 || n > kMaxEnumerationVertices)
    throw Error("exhaustive verification supports 1 <= n <= 10, got " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();
  auto report = new_report(fam, n, "exhaustive");

  EnumSpec spec;
  spec.n = n;
  spec.min_degree_at_least = degree_floor(report.threshold, n);
  spec.exclude = fam;
  spec.threads = threads;
  enumerate_graphs(spec, [&](const Graph& g) { record(report, g, classify_family_free(g, report.profile)); });

  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  std::sort(report.extremal_matches.begin(), report.extremal_matches.end(),
            [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  finish(report);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

auto splitmix64(std::uint64_t x) -> std::uint64_t {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Small deterministic generator (xoshiro256**), seeded per trial.
class TrialRng
{
public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t x = splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL);
    for (auto& s : _s)
      s = x = splitmix64(x);
  }

  auto next() -> std::uint64_t {
    const std::uint64_t result = std::rotl(_s[1] * 5, 7) * 9;
    const std::uint64_t t = _s[1] << 17;
    _s[2] ^= _s[0];
    _s[3] ^= _s[1];
    _s[1] ^= _s[2];
    _s[0] ^= _s[3];
    _s[2] ^= t;
    _s[3] = std::rotl(_s[3], 45);
    return result;
  }

  /// Uniform in [0, bound).
  auto below(int bound) -> int { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
  /// Uniform in [lo, hi].
  auto between(int lo, int hi) -> int { return lo + below(hi - lo + 1); }

  auto shuffle(std::vector<int>& v) -> void {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

private:
  std::uint64_t _s[4];
};

class Sampler
{
public:
  Sampler(const FamilyProfile& profile, int n, int degree_target)
      : _profile(profile), _n(n), _target(degree_target) {}

  auto draw(TrialRng& rng) const -> Graph {
    const int cycle = 2 * _profile.k + 3;
    const int spine = 2 * _profile.ell + 1;
    int kind = rng.below(3);
    if (kind == 1 && cycle > _n)
      kind = 0;
    if (kind == 2 && 2 * spine > _n)
      kind = 0;

    GraphBuilder b(_n);
    switch (kind) {
    case 0:
      bipartite_with_noise(rng, b);
      break;
    case 1:
      cycle_blowup(rng, b, cycle);
      break;
    default:
      bc_like(rng, b, spine);
      break;
    }
    if (kind != 0)
      perturb(rng, b);

    std::vector<int> perm(_n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return relabel(std::move(b).build(), perm);
  }

private:
  auto bipartite_with_noise(TrialRng& rng, GraphBuilder& b) const -> void {
    if (_n < 2)
      return;
    const int a = std::clamp(_n / 2 + rng.between(-1, 1), 1, _n - 1);
    const int d = std::min({_target + rng.between(0, 2), a, _n - a});
    std::vector<int> xs(a), ys(_n - a);
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), a);
    for (int x : xs) {
      rng.shuffle(ys);
      for (int i = 0; i < d; ++i)
        b.add_edge(x, ys[i]);
    }
    for (int y = a; y < _n; ++y) {
      int have = 0;
      for (int x = 0; x < a; ++x)
        have += b.adjacent(x, y) ? 1 : 0;
      rng.shuffle(xs);
      for (int i = 0; i < a && have < d; ++i) {
        if (!b.adjacent(xs[i], y)) {
          b.add_edge(xs[i], y);
          ++have;
        }
      }
    }
    const int noise = rng.between(1, 3);
    for (int i = 0; i < noise; ++i) {
      int u = rng.below(_n), v = rng.below(_n);
      if (u != v)
        b.add_edge(u, v);
    }
  }

  /// Near-balanced part sizes summing to total, each at least `floor_size`.
  auto split(TrialRng& rng, int total, int parts, int floor_size) const -> std::vector<int> {
    std::vector<int> sizes(parts, total / parts);
    for (int i = 0; i < total % parts; ++i)
      ++sizes[rng.below(parts)];
    if (rng.below(2) == 1) {
      int from = rng.below(parts), to = rng.below(parts);
      if (sizes[from] > floor_size) {
        --sizes[from];
        ++sizes[to];
      }
    }
    return sizes;
  }

  auto cycle_blowup(TrialRng& rng, GraphBuilder& b, int m) const -> void {
    auto sizes = split(rng, _n, m, 1);
    std::vector<int> offset(m + 1, 0);
    for (int i = 0; i < m; ++i)
      offset[i + 1] = offset[i] + sizes[i];
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      for (int x = offset[i]; x < offset[i + 1]; ++x)
        for (int y = offset[j]; y < offset[j + 1]; ++y)
          b.add_edge(x, y);
    }
  }

  auto bc_like(TrialRng& rng, GraphBuilder& b, int spine) const -> void {
    auto sizes = split(rng, _n - spine, spine, 1);
    for (int i = 0; i < spine; ++i)
      b.add_edge(i, (i + 1) % spine);
    int next = spine;
    for (int i = 0; i < spine; ++i) {
      const int total = sizes[i] + 1; // block vertices including the spine vertex
      int first = total / 2;
      if (total % 2 == 1 || rng.below(4) == 0)
        first = std::clamp(first + rng.between(-1, 1), 1, total - 1);
      std::vector<int> a{i}, c;
      for (int j = 1; j < first; ++j)
        a.push_back(next++);
      for (int j = first; j < total; ++j)
        c.push_back(next++);
      for (int x : a)
        for (int y : c)
          b.add_edge(x, y);
    }
  }

  auto perturb(TrialRng& rng, GraphBuilder& b) const -> void {
    static constexpr int kEdits[] = {0, 0, 1, 2, 3};
    const int edits = kEdits[rng.below(5)];
    for (int e = 0; e < edits; ++e) {
      const bool add = rng.below(2) == 0;
      for (int attempt = 0; attempt < 64; ++attempt) {
        int u = rng.below(_n), v = rng.below(_n);
        if (u == v || b.adjacent(u, v) == add)
          continue;
        if (add)
          b.add_edge(u, v);
        else
          b.remove_edge(u, v);
        break;
      }
    }
  }

  const FamilyProfile& _profile;
  int _n;
  int _target;
};

struct TrialOutcome
{
  enum class Kind { below_degree, not_free, classified } kind = Kind::below_degree;
  Graph graph;
  TheoremCheck check;
};

} // namespace

auto random_counterexample_search(const OddFamily& fam, int n, std::int64_t trials, std::uint64_t seed, int threads)
    -> VerificationReport {
  if (n < 1 || n > kMaxVertices)
    throw Error("random search supports 1 <= n <= 512, got " + std::to_string(n));
  if (trials < 0)
    throw Error("trial count must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  auto report = new_report(fam, n, "random");
  report.seed = seed;
  SamplerStats stats;
  stats.trials = trials;

  const int floor = degree_floor(report.threshold, n);
  const Sampler sampler(report.profile, n, floor);
  bool seen_kind[2] = {false, false};

  auto run_trial = [&](std::int64_t i) {
    TrialRng rng(seed, static_cast<std::uint64_t>(i));
    TrialOutcome out;
    Graph g = sampler.draw(rng);
    if (min_degree(g) < floor)
      return out;
    if (!is_family_free(g, fam)) {
      out.kind = TrialOutcome::Kind::not_free;
      return out;
    }
    out.kind = TrialOutcome::Kind::classified;
    out.check = classify_family_free(g, report.profile);
    out.graph = std::move(g);
    return out;
  };

  auto fold = [&](TrialOutcome& o) {
    switch (o.kind) {
    case TrialOutcome::Kind::below_degree:
      ++stats.rejected_degree;
      return;
    case TrialOutcome::Kind::not_free:
      ++stats.rejected_family;
      return;
    case TrialOutcome::Kind::classified:
      break;
    }
    ++stats.accepted;
    const Verdict v = o.check.verdict;
    // One representative per extremal kind; all matches are isomorphic.
    if (v == Verdict::extremal_match_bc || v == Verdict::extremal_match_blowup) {
      bool& seen = seen_kind[v == Verdict::extremal_match_bc ? 0 : 1];
      if (seen) {
        ++report.candidates_examined;
        ++report.equality_candidates;
        return;
      }
      seen = true;
    }
    if (v == Verdict::counterexample && report.counterexamples.size() >= kListedCounterexamples) {
      ++report.candidates_examined;
      ++report.counterexample_total;
      (o.check.strict ? report.strict_candidates : report.equality_candidates)++;
      return;
    }
    record(report, o.graph, o.check);
  };

  const int workers = threads > 0 ? threads : default_thread_count();
  constexpr std::int64_t kChunk = 512;
  if (workers <= 1) {
    for (std::int64_t i = 0; i < trials; ++i) {
      auto o = run_trial(i);
      fold(o);
    }
  } else {
    const std::int64_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<std::vector<TrialOutcome>> done(static_cast<std::size_t>(chunks));
    std::vector<char> ready(static_cast<std::size_t>(chunks), 0);
    std::int64_t flushed = 0;
    std::mutex lock;
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
      while (true) {
        std::int64_t c = next.fetch_add(1);
        if (c >= chunks)
          return;
        std::vector<TrialOutcome> local;
        for (std::int64_t i = c * kChunk; i < std::min(trials, (c + 1) * kChunk); ++i)
          local.push_back(run_trial(i));
        std::lock_guard guard(lock);
        done[c] = std::move(local);
        ready[c] = 1;
        while (flushed < chunks && ready[flushed]) {
          for (auto& o : done[flushed])
            fold(o);
          std::vector<TrialOutcome>().swap(done[flushed]);
          ++flushed;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }

  report.sampler = stats;
  finish(report);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

auto report_to_json(const VerificationReport& r) -> std::string {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["mode"] = r.mode;
  j["family"] = ordered_json(std::vector<int>(r.family.lengths().begin(), r.family.lengths().end()));
  j["profile"] = {{"ell", r.profile.ell}, {"k", r.profile.k}, {"regime", to_string(r.profile.regime)}};
  j["threshold"] = {{"num", r.threshold.num}, {"den", r.threshold.den}, {"text", r.threshold.to_string()}};
  j["n"] = r.n;
  j["minDegreeAtBound"] = degree_floor(r.threshold, r.n);
  j["candidatesExamined"] = r.candidates_examined;
  j["strictCandidates"] = r.strict_candidates;
  j["equalityCandidates"] = r.equality_candidates;
  j["bipartiteCandidates"] = r.bipartite_candidates;
  auto ce = ordered_json::array();
  for (const auto& c : r.counterexamples)
    ce.push_back({{"graph6", c.graph6}, {"minDegree", c.min_degree}, {"slice", c.slice}});
  j["counterexamples"] = ce;
  j["counterexampleTotal"] = r.counterexample_total;
  auto em = ordered_json::array();
  for (const auto& m : r.extremal_matches)
    em.push_back({{"graph6", m.graph6}, {"kind", to_string(m.kind)}});
  j["extremalMatches"] = em;
  j["belowProvenRange"] = r.below_proven_range;
  j["suiteFailure"] = r.suite_failure;
  j["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
  if (r.sampler)
    j["sampler"] = {{"trials", r.sampler->trials},
                    {"rejectedDegree", r.sampler->rejected_degree},
                    {"rejectedFamily", r.sampler->rejected_family},
                    {"accepted", r.sampler->accepted}};
  j["elapsed"] = std::round(r.elapsed_seconds * 1000.0) / 1000.0;
  return j.dump();
}

} // namespace oddspan
