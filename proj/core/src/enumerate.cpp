#include "oddspan/enumerate.hpp"
#include "oddspan/canon.hpp"
#include "oddspan/cycles.hpp"
#include "oddspan/graph6.hpp"

#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace oddspan {

auto default_thread_count() -> int {
  if (const char* env = std::getenv("ODDSPAN_THREADS")) {
    int value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0)
      return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

class Augmenter
{
public:
  explicit Augmenter(const EnumSpec& spec) : _spec(spec), _target(spec.min_degree_at_least.value_or(0)) {}

  /// Accepted children of the canonical graph `parent`, in ascending order of
  /// the new vertex's neighbourhood mask.
  auto children(const Graph& parent) const -> std::vector<Graph> {
    const int j = parent.order();
    const int need = _target - (_spec.n - (j + 1));
    const auto parent_edges = parent.edges();
    const auto parent_degrees = parent.degrees();

    std::uint64_t forced = 0; // vertices that must gain the new neighbour
    for (int v = 0; v < j; ++v) {
      if (parent_degrees[v] + 1 < need)
        return {};
      if (parent_degrees[v] < need)
        forced |= std::uint64_t{1} << v;
    }

    std::vector<Graph> out;
    std::set<std::string> seen;
    const std::uint64_t limit = std::uint64_t{1} << j;
    for (std::uint64_t s = 0; s < limit; ++s) {
      if ((s & forced) != forced)
        continue;
      const int d = std::popcount(s);
      if (d < need)
        continue;
      // The new vertex must be a minimum-degree vertex of the child.
      bool minimal = true;
      for (int v = 0; v < j && minimal; ++v)
        minimal = parent_degrees[v] + static_cast<int>((s >> v) & 1U) >= d;
      if (!minimal)
        continue;

      GraphBuilder b(j + 1);
      for (auto [u, v] : parent_edges)
        b.add_edge(u, v);
      for (std::uint64_t r = s; r; r &= r - 1)
        b.add_edge(std::countr_zero(r), j);
      Graph child = std::move(b).build();

      if (_spec.exclude && !family_free_through(child, j))
        continue;

      auto canon = canonicalize(child);
      int last_min = -1;
      for (int i = j; i >= 0; --i) {
        if (child.degree(canon.labeling[i]) == d) {
          last_min = canon.labeling[i];
          break;
        }
      }
      if (canon.orbit[j] != canon.orbit[last_min])
        continue;
      if (seen.insert(graph6_encode(canon.graph)).second)
        out.push_back(std::move(canon.graph));
    }
    return out;
  }

  auto accept_final(const Graph& g) const -> bool {
    if (!_spec.min_degree_at_least)
      return true;
    return g.order() > 0 && min_degree(g) >= _target;
  }

  /// Depth-first walk below `g`, emitting accepted graphs on n vertices.
  auto walk(const Graph& g, const std::function<void(const Graph&)>& emit) const -> void {
    if (g.order() == _spec.n) {
      if (accept_final(g))
        emit(g);
      return;
    }
    for (const auto& child : children(g))
      walk(child, emit);
  }

  /// Graphs at `level` in depth-first order.
  auto frontier(const Graph& g, int level, std::vector<Graph>& out) const -> void {
    if (g.order() == level) {
      out.push_back(g);
      return;
    }
    for (const auto& child : children(g))
      frontier(child, level, out);
  }

private:
  auto family_free_through(const Graph& g, int v) const -> bool {
    for (int L : _spec.exclude->lengths())
      if (has_cycle_through(g, L, v))
        return false;
    return true;
  }

  const EnumSpec& _spec;
  int _target;
};

} // namespace

auto enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& sink) -> std::int64_t {
  if (spec.n < 0 || spec.n > kMaxEnumerationVertices)
    throw Error("exhaustive enumeration supports 0 <= n <= 10, got " + std::to_string(spec.n));

  Augmenter aug(spec);
  std::int64_t count = 0;
  auto counted = [&](const Graph& g) {
    ++count;
    sink(g);
  };

  const int threads = spec.threads > 0 ? spec.threads : default_thread_count();
  const Graph root = Graph::empty(0);
  if (threads <= 1 || spec.n < 6) {
    aug.walk(root, counted);
    return count;
  }

  std::vector<Graph> branches;
  aug.frontier(root, spec.n - 3, branches);

  // Branch outputs are flushed in branch order so the sink sees the same
  // sequence as a sequential walk.
  std::vector<std::vector<Graph>> done(branches.size());
  std::vector<char> ready(branches.size(), 0);
  std::size_t flushed = 0;
  std::mutex lock;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= branches.size())
        return;
      std::vector<Graph> local;
      aug.walk(branches[i], [&](const Graph& g) { local.push_back(g); });
      std::lock_guard guard(lock);
      done[i] = std::move(local);
      ready[i] = 1;
      while (flushed < branches.size() && ready[flushed]) {
        for (const auto& g : done[flushed])
          counted(g);
        std::vector<Graph>().swap(done[flushed]);
        ++flushed;
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  return count;
}

auto collect_graphs(const EnumSpec& spec) -> std::vector<Graph> {
  std::vector<Graph> out;
  enumerate_graphs(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

} // namespace oddspan
