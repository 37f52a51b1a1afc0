// oddspan: command-line front end for the odd-cycle bipartiteness toolkit.
//
//   oddspan construct --type bc --ell 2 --t 3
//   oddspan analyze [--cap L]              < graphs.g6
//   oddspan profile --family 3,7 [--n 45]
//   oddspan verify --family 3,5 --n 8 --exhaustive
//   oddspan search --family 3,19 --n 60 --trials 100000 --seed 42
//   oddspan enumerate --n 7 [--min-degree 2] [--free 3,5] --out graphs.g6
//
// Machine output is JSON (one object per line) carrying "schema": 1; graphs
// travel as graph6. Exit status: 0 success, 1 suite failure, 2 bad input.

#include "oddspan/constructions.hpp"
#include "oddspan/cycles.hpp"
#include "oddspan/enumerate.hpp"
#include "oddspan/family.hpp"
#include "oddspan/graph6.hpp"
#include "oddspan/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

using nlohmann::ordered_json;

namespace {

constexpr int kDefaultAnalyzeCap = 20;

auto analyze_line(const std::string& line, int cap) -> ordered_json {
  auto g = oddspan::graph6_decode(line);
  ordered_json j;
  j["schema"] = 1;
  j["graph6"] = oddspan::graph6_encode(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["minDegree"] = g.order() > 0 ? ordered_json(oddspan::min_degree(g)) : ordered_json(nullptr);
  auto odd = oddspan::shortest_odd_cycle(g);
  j["oddGirth"] = odd ? ordered_json(odd->length()) : ordered_json(nullptr);
  j["bipartite"] = !odd.has_value();
  const int effective = std::min(cap > 0 ? cap : kDefaultAnalyzeCap, g.order());
  auto spectrum = oddspan::cycle_spectrum(g, effective);
  j["spectrumCap"] = spectrum.cap;
  j["spectrum"] = std::vector<int>(spectrum.present.begin(), spectrum.present.end());
  return j;
}

auto profile_json(const oddspan::OddFamily& fam, int n) -> ordered_json {
  auto p = oddspan::family_profile(fam);
  auto t = oddspan::degree_threshold(p);
  ordered_json j;
  j["schema"] = 1;
  j["family"] = std::vector<int>(fam.lengths().begin(), fam.lengths().end());
  j["ell"] = p.ell;
  j["k"] = p.k;
  j["regime"] = oddspan::to_string(p.regime);
  j["threshold"] = t.to_string();
  if (n > 0) {
    const std::int64_t num = t.num * n;
    const std::int64_t g = std::gcd(num, t.den);
    j["n"] = n;
    j["bound"] = std::to_string(num / g) + (t.den / g == 1 ? "" : "/" + std::to_string(t.den / g));
    j["boundValue"] = static_cast<double>(num) / static_cast<double>(t.den);
    j["minDegreeStrict"] = num / t.den + 1;
    j["minDegreeAtBound"] = oddspan::degree_floor(t, n);
  }
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"oddspan: minimum-degree bipartiteness toolkit for odd-cycle-free graphs"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Print a named extremal graph as graph6");
  std::string type;
  oddspan::ConstructionSpec spec;
  construct->add_option("--type", type, "turan|kab|cycle|blowup|bc|haggkvist")->required();
  construct->add_option("--n", spec.n, "vertex count (turan; or total size for blowup/bc/haggkvist)");
  construct->add_option("--r", spec.r, "number of parts (turan)");
  construct->add_option("--a", spec.a, "first side (kab)");
  construct->add_option("--b", spec.b, "second side (kab)");
  construct->add_option("--m", spec.m, "cycle length (cycle, blowup)");
  construct->add_option("--t", spec.t, "part size (blowup, bc, haggkvist)");
  construct->add_option("--ell", spec.ell, "spine half-length: spine is C_{2ell+1} (bc)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Read graph6 lines on stdin, print one JSON object per line");
  int cap = 0;
  analyze->add_option("--cap", cap, "longest cycle length to test (default min(n, 20))");

  // profile
  auto* profile = app.add_subcommand("profile", "Print ell, k, regime and the exact degree threshold");
  std::string family_text;
  int n = 0;
  profile->add_option("--family", family_text, "comma-separated odd cycle lengths")->required();
  profile->add_option("--n", n, "vertex count for the evaluated bound");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive verification over all graphs on n <= 10 vertices");
  bool exhaustive = false;
  verify->add_option("--family", family_text, "comma-separated odd cycle lengths")->required();
  verify->add_option("--n", n, "vertex count")->required();
  verify->add_flag("--exhaustive", exhaustive, "canonical enumeration of every candidate")->required();

  // search
  auto* search = app.add_subcommand("search", "Seeded randomized counterexample search");
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  search->add_option("--family", family_text, "comma-separated odd cycle lengths")->required();
  search->add_option("--n", n, "vertex count")->required();
  search->add_option("--trials", trials, "number of sampled graphs")->required();
  search->add_option("--seed", seed, "64-bit seed")->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Write one graph6 line per isomorphism class");
  int min_degree = -1;
  std::string free_text, out_path;
  enumerate->add_option("--n", n, "vertex count (<= 10)")->required();
  enumerate->add_option("--min-degree", min_degree, "keep graphs with minimum degree at least D");
  enumerate->add_option("--free", free_text, "exclude graphs containing any of these cycle lengths");
  enumerate->add_option("--out", out_path, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      spec.kind = oddspan::parse_construction_kind(type);
      std::cout << oddspan::graph6_encode(oddspan::build(spec)) << '\n';
      return 0;
    }

    if (*analyze) {
      std::string line;
      int status = 0;
      long lineno = 0;
      while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.empty())
          continue;
        try {
          std::cout << analyze_line(line, cap).dump() << '\n';
        } catch (const oddspan::Error& e) {
          ordered_json err{{"schema", 1}, {"line", lineno}, {"error", e.what()}};
          std::cout << err.dump() << '\n';
          status = 2;
        }
      }
      return status;
    }

    if (*profile) {
      std::cout << profile_json(oddspan::OddFamily::parse(family_text), n).dump() << '\n';
      return 0;
    }

    if (*verify) {
      auto report = oddspan::verify_theorem_exhaustive(oddspan::OddFamily::parse(family_text), n);
      std::cout << oddspan::report_to_json(report) << '\n';
      return report.suite_failure ? 1 : 0;
    }

    if (*search) {
      auto report = oddspan::random_counterexample_search(oddspan::OddFamily::parse(family_text), n, trials, seed);
      std::cout << oddspan::report_to_json(report) << '\n';
      return report.suite_failure ? 1 : 0;
    }

    if (*enumerate) {
      oddspan::EnumSpec es;
      es.n = n;
      if (min_degree >= 0)
        es.min_degree_at_least = min_degree;
      if (!free_text.empty())
        es.exclude = oddspan::OddFamily::parse(free_text);
      std::ofstream out(out_path);
      if (!out)
        throw oddspan::Error("cannot open " + out_path + " for writing");
      auto count = oddspan::enumerate_graphs(es, [&](const oddspan::Graph& g) { out << oddspan::graph6_encode(g) << '\n'; });
      ordered_json summary{{"schema", 1}, {"n", n}, {"count", count}, {"out", out_path}};
      std::cout << summary.dump() << '\n';
      return 0;
    }
  } catch (const oddspan::Error& e) {
    std::cerr << "oddspan: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
