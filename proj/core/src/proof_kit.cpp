#include "oddspan/proof_kit.hpp"
#include "oddspan/blocks.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace oddspan {

auto min_degree_subgraph(const Graph& g) -> DenseCore {
  const std::int64_t n = g.order();
  const std::int64_t m = g.size();
  if (m == 0)
    throw Error("min_degree_subgraph: graph has no edges");

  VertexSet alive = VertexSet::prefix(g.order());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      std::int64_t d = (g.neighbors(v) & alive).count();
      if (d * n < m) {
        alive.reset(v);
        changed = true;
      }
    }
  }

  DenseCore core;
  alive.for_each([&](int v) { core.vertices.push_back(v); });
  core.graph = induced_subgraph(g, core.vertices);
  return core;
}

auto longest_path_order(const Graph& g) -> int {
  const int n = g.order();
  if (n == 0)
    throw Error("longest_path_order: empty graph");
  if (n > kMaxLongestPathVertices)
    throw Error("longest_path_order supports at most 20 vertices, got " + std::to_string(n));

  std::vector<std::uint32_t> rows(n);
  for (int v = 0; v < n; ++v)
    rows[v] = static_cast<std::uint32_t>(g.row64(v));

  // ends[mask]: vertices v such that some simple path covers exactly mask and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v)
    ends[std::size_t{1} << v] = std::uint32_t{1} << v;

  int best = 1;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::uint32_t e = ends[mask];
    if (!e)
      continue;
    best = std::max(best, std::popcount(mask));
    for (; e; e &= e - 1) {
      int v = std::countr_zero(e);
      for (std::uint32_t ext = rows[v] & ~mask; ext; ext &= ext - 1) {
        std::uint32_t w = ext & (~ext + 1);
        ends[mask | w] |= w;
      }
    }
  }
  return best;
}

auto erdos_gallai_holds(const Graph& g, int k) -> bool {
  if (k < 1)
    throw Error("erdos_gallai_holds: k must be at least 1");
  if (longest_path_order(g) > k)
    return true;
  return 2 * static_cast<std::int64_t>(g.size()) <= static_cast<std::int64_t>(k - 1) * g.order();
}

namespace {

class PathSearch
{
public:
  PathSearch(const PathRequest& req, std::int64_t budget) : _req(req), _budget(budget) {}

  auto side_set(Side s) const -> const VertexSet& { return s == Side::x ? _req.x_side : _req.y_side; }

  auto opposite(int v) const -> const VertexSet& {
    return _req.x_side.test(v) ? _req.y_side : _req.x_side;
  }

  auto greedy(int start) const -> std::optional<std::vector<int>> {
    std::vector<int> path{start};
    VertexSet used;
    used.set(start);
    while (static_cast<int>(path.size()) < _req.order) {
      int cur = path.back();
      VertexSet cand = (_req.host->neighbors(cur) & opposite(cur)) - used;
      int w = cand.first();
      if (w < 0)
        return std::nullopt;
      path.push_back(w);
      used.set(w);
    }
    return path;
  }

  auto exhaustive(int start) -> std::optional<std::vector<int>> {
    _path.assign(1, start);
    _used = VertexSet{};
    _used.set(start);
    if (extend())
      return _path;
    return std::nullopt;
  }

  auto exhausted() const -> bool { return _budget <= 0; }

private:
  auto extend() -> bool {
    if (static_cast<int>(_path.size()) == _req.order)
      return true;
    if (--_budget <= 0)
      return false;
    int cur = _path.back();
    VertexSet cand = (_req.host->neighbors(cur) & opposite(cur)) - _used;
    for (int w = cand.first(); w >= 0; w = cand.next(w)) {
      _path.push_back(w);
      _used.set(w);
      if (extend())
        return true;
      _used.reset(w);
      _path.pop_back();
      if (_budget <= 0)
        return false;
    }
    return false;
  }

  const PathRequest& _req;
  std::int64_t _budget;
  std::vector<int> _path;
  VertexSet _used;
};

} // namespace

auto greedy_bipartite_path(const PathRequest& req, std::int64_t node_budget) -> std::optional<std::vector<int>> {
  if (req.host == nullptr)
    throw Error("greedy_bipartite_path: no host graph");
  if (req.order < 1)
    throw Error("greedy_bipartite_path: order must be positive");
  const bool same = req.end_a == req.end_b;
  if (same != (req.order % 2 == 1))
    throw Error("greedy_bipartite_path: ends on " + std::string(same ? "the same side" : "opposite sides") +
                " need an " + (same ? "odd" : "even") + " order, got " + std::to_string(req.order));
  if (req.x_side.intersects(req.y_side))
    throw Error("greedy_bipartite_path: sides overlap");

  PathSearch search(req, node_budget);
  const VertexSet& starts = search.side_set(req.end_a);
  for (int s = starts.first(); s >= 0 && s < req.host->order(); s = starts.next(s))
    if (auto p = search.greedy(s))
      return p;
  for (int s = starts.first(); s >= 0 && s < req.host->order() && !search.exhausted(); s = starts.next(s))
    if (auto p = search.exhaustive(s))
      return p;
  return std::nullopt;
}

auto recognize_cycle_blowup(const Graph& g) -> std::optional<CycleBlowupShape> {
  const int n = g.order();
  std::map<std::vector<std::uint64_t>, int> class_of_row;
  std::vector<int> cls(n);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0)
      return std::nullopt;
    auto row = g.row(v);
    auto [it, fresh] = class_of_row.try_emplace(std::vector<std::uint64_t>(row.begin(), row.end()),
                                                static_cast<int>(members.size()));
    if (fresh)
      members.emplace_back();
    cls[v] = it->second;
    members[it->second].push_back(v);
  }

  const int m = static_cast<int>(members.size());
  if (m < 5)
    return std::nullopt;

  std::vector<std::vector<int>> quotient(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      if (a != b && g.adjacent(members[a][0], members[b][0]))
        quotient[a].push_back(b);
    if (quotient[a].size() != 2)
      return std::nullopt;
  }

  // members are created in order of least vertex, so class 0 holds vertex 0
  // and quotient lists are sorted by least vertex too.
  CycleBlowupShape shape;
  shape.m = m;
  int prev = 0, cur = quotient[0][0];
  shape.parts.push_back(members[0]);
  while (cur != 0) {
    shape.parts.push_back(members[cur]);
    int next = quotient[cur][0] == prev ? quotient[cur][1] : quotient[cur][0];
    prev = cur;
    cur = next;
    if (static_cast<int>(shape.parts.size()) > m)
      return std::nullopt;
  }
  if (static_cast<int>(shape.parts.size()) != m)
    return std::nullopt; // quotient is a union of several cycles
  for (const auto& p : shape.parts)
    shape.sizes.push_back(static_cast<int>(p.size()));
  return shape;
}

namespace {

/// Sizes of the two colour classes of a connected bipartite vertex set, or nullopt.
auto bipartite_sides(const Graph& g, const VertexSet& set) -> std::optional<std::pair<int, int>> {
  std::vector<int> side(g.order(), -1);
  int root = set.first();
  side[root] = 0;
  std::vector<int> queue{root};
  int counts[2] = {1, 0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    auto nb = g.neighbors(u) & set;
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        ++counts[side[w]];
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        return std::nullopt;
      }
    }
  }
  return std::pair{counts[0], counts[1]};
}

auto edges_within(const Graph& g, const VertexSet& set) -> int {
  int twice = 0;
  set.for_each([&](int v) { twice += (g.neighbors(v) & set).count(); });
  return twice / 2;
}

} // namespace

auto recognize_bc_graph(const Graph& g) -> std::optional<BcShape> {
  const int n = g.order();
  if (n < 6)
    return std::nullopt;
  auto dec = block_decomposition(g);

  VertexSet covered;
  for (const auto& b : dec.blocks)
    covered |= b;
  if (covered.count() != n)
    return std::nullopt;

  int spine_index = -1;
  std::vector<std::pair<int, int>> sides(dec.blocks.size());
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    auto s = bipartite_sides(g, dec.blocks[i]);
    if (!s) {
      if (spine_index >= 0)
        return std::nullopt;
      spine_index = static_cast<int>(i);
    } else {
      sides[i] = *s;
    }
  }
  if (spine_index < 0)
    return std::nullopt;

  const VertexSet& spine = dec.blocks[spine_index];
  const int length = spine.count();
  if (length % 2 == 0 || edges_within(g, spine) != length)
    return std::nullopt;
  bool two_regular = true;
  spine.for_each([&](int v) { two_regular = two_regular && (g.neighbors(v) & spine).count() == 2; });
  if (!two_regular || !(dec.cut_vertices == spine))
    return std::nullopt;
  if (static_cast<int>(dec.blocks.size()) != length + 1)
    return std::nullopt;

  int t = -1;
  VertexSet attached;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    if (static_cast<int>(i) == spine_index)
      continue;
    const VertexSet& b = dec.blocks[i];
    VertexSet cuts = b & spine;
    if (cuts.count() != 1 || attached.intersects(cuts))
      return std::nullopt;
    attached |= cuts;
    auto [a, c] = sides[i];
    if (a != c || edges_within(g, b) != a * c)
      return std::nullopt;
    if (t < 0)
      t = a;
    else if (t != a)
      return std::nullopt;
  }
  if (!(attached == spine) || n != 2 * length * t)
    return std::nullopt;
  return BcShape{(length - 1) / 2, t};
}

} // namespace oddspan
