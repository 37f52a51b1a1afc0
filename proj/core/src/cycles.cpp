#include "oddspan/cycles.hpp"
#include "oddspan/blocks.hpp"

#include <limits>

namespace oddspan {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 2;

/// DFS for a cycle of `length` vertices starting and ending at `start`, all
/// other vertices drawn from `allowed`.
class CycleSearch
{
public:
  CycleSearch(const Graph& g, int start, const VertexSet& allowed, int length, bool orient)
      : _g(g), _start(start), _allowed(allowed), _length(length), _orient(orient) {
    parity_distances();
  }

  auto run() -> std::optional<Cycle> {
    _path.assign(1, _start);
    _visited = VertexSet{};
    _visited.set(_start);
    if (extend())
      return Cycle{_path};
    return std::nullopt;
  }

private:
  // Shortest walk lengths of each parity from start inside allowed + start.
  auto parity_distances() -> void {
    const int n = _g.order();
    _dist.assign(2 * static_cast<std::size_t>(n), kUnreached);
    VertexSet region = _allowed;
    region.set(_start);
    std::vector<int> queue{2 * _start};
    _dist[2 * _start] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int state = queue[head];
      int u = state / 2, p = state % 2;
      auto nb = _g.neighbors(u) & region;
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        int next = 2 * w + (1 - p);
        if (_dist[next] == kUnreached) {
          _dist[next] = _dist[state] + 1;
          queue.push_back(next);
        }
      }
    }
  }

  auto extend() -> bool {
    const int cur = _path.back();
    const int len = static_cast<int>(_path.size());
    if (len == _length)
      return _g.adjacent(cur, _start) && (!_orient || cur > _path[1]);

    const int remaining = _length - len; // edges from the next vertex back to start
    VertexSet cand = (_g.neighbors(cur) & _allowed) - _visited;
    if (remaining >= 3)
      cand &= reachable_back(remaining);
    for (int w = cand.first(); w >= 0; w = cand.next(w)) {
      if (_dist[2 * w + (remaining & 1)] > remaining)
        continue;
      _path.push_back(w);
      _visited.set(w);
      if (extend())
        return true;
      _visited.reset(w);
      _path.pop_back();
    }
    return false;
  }

  // Unvisited vertices joined to start by a walk of at most `steps` edges
  // with the parity of `steps`, avoiding the current path.
  auto reachable_back(int steps) const -> VertexSet {
    VertexSet region = _allowed - _visited;
    region.set(_start);
    VertexSet reached[2];
    VertexSet frontier;
    frontier.set(_start);
    reached[0] = frontier;
    for (int t = 1; t <= steps && !frontier.empty(); ++t) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= _g.neighbors(v); });
      next &= region;
      next -= reached[t & 1];
      reached[t & 1] |= next;
      frontier = next;
    }
    return reached[steps & 1];
  }

  const Graph& _g;
  int _start;
  VertexSet _allowed;
  int _length;
  bool _orient;
  std::vector<int> _dist;
  std::vector<int> _path;
  VertexSet _visited;
};

auto block_is_bipartite(const Graph& g, const VertexSet& block) -> bool {
  std::vector<int> side(g.order(), -1);
  int root = block.first();
  side[root] = 0;
  std::vector<int> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    auto nb = g.neighbors(u) & block;
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

auto shortest_odd_cycle(const Graph& g) -> std::optional<Cycle> {
  const int n = g.order();
  int best = kUnreached, best_start = -1;
  std::vector<int> dist(2 * static_cast<std::size_t>(n)), parent(2 * static_cast<std::size_t>(n));
  std::vector<int> best_parent;
  std::vector<int> queue;

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[2 * s] = 0;
    queue.assign(1, 2 * s);
    bool closed = false;
    for (std::size_t head = 0; head < queue.size() && !closed; ++head) {
      int state = queue[head];
      if (dist[state] + 1 >= best)
        break;
      int u = state / 2, p = state % 2;
      auto nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        int next = 2 * w + (1 - p);
        if (dist[next] != kUnreached)
          continue;
        dist[next] = dist[state] + 1;
        parent[next] = state;
        if (next == 2 * s + 1) {
          best = dist[next];
          best_start = s;
          best_parent = parent;
          closed = true;
          break;
        }
        queue.push_back(next);
      }
    }
  }
  if (best_start < 0)
    return std::nullopt;

  // A shortest odd closed walk is a simple cycle.
  Cycle c;
  for (int state = best_parent[2 * best_start + 1]; state != 2 * best_start; state = best_parent[state])
    c.vertices.push_back(state / 2);
  c.vertices.push_back(best_start);
  return c;
}

auto has_cycle_of_length(const Graph& g, int length) -> std::optional<Cycle> {
  if (length < 3 || length > g.order())
    return std::nullopt;
  auto decomposition = block_decomposition(g);
  for (const auto& block : decomposition.blocks) {
    if (block.count() < length)
      continue;
    if (length % 2 == 1 && block_is_bipartite(g, block))
      continue;
    VertexSet allowed = block;
    for (int s = block.first(); s >= 0; s = block.next(s)) {
      allowed.reset(s);
      if (allowed.count() + 1 < length)
        break;
      if ((g.neighbors(s) & allowed).count() < 2)
        continue;
      if (auto c = CycleSearch(g, s, allowed, length, true).run())
        return c;
    }
  }
  return std::nullopt;
}

auto has_cycle_through(const Graph& g, int length, int v) -> std::optional<Cycle> {
  if (length < 3 || length > g.order())
    return std::nullopt;
  VertexSet allowed = VertexSet::prefix(g.order());
  allowed.reset(v);
  if ((g.neighbors(v)).count() < 2)
    return std::nullopt;
  return CycleSearch(g, v, allowed, length, true).run();
}

auto CycleSpectrum::odd() const -> std::set<int> {
  std::set<int> out;
  for (int L : present)
    if (L % 2 == 1)
      out.insert(L);
  return out;
}

auto CycleSpectrum::even() const -> std::set<int> {
  std::set<int> out;
  for (int L : present)
    if (L % 2 == 0)
      out.insert(L);
  return out;
}

auto cycle_spectrum(const Graph& g, int cap) -> CycleSpectrum {
  CycleSpectrum s;
  s.cap = std::min(cap, g.order());
  auto odd_girth = shortest_odd_cycle(g);
  for (int L = 3; L <= s.cap; ++L) {
    if (L % 2 == 1 && (!odd_girth || L < odd_girth->length()))
      continue;
    if (has_cycle_of_length(g, L))
      s.present.insert(L);
  }
  return s;
}

auto is_family_free(const Graph& g, const OddFamily& fam) -> FamilyCheck {
  auto odd_girth = shortest_odd_cycle(g);
  if (!odd_girth)
    return {};
  for (int L : fam.lengths()) {
    if (L < odd_girth->length())
      continue;
    if (L == odd_girth->length())
      return FamilyCheck{false, odd_girth};
    if (auto c = has_cycle_of_length(g, L))
      return FamilyCheck{false, std::move(c)};
  }
  return {};
}

} // namespace oddspan
