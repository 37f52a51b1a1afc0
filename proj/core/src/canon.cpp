#include "oddspan/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace oddspan {
namespace {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

auto bit(int v) -> Mask { return Mask{1} << v; }

struct UnionFind
{
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  auto find(int x) -> int {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  auto unite(int a, int b) -> void {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

class Search
{
public:
  explicit Search(const Graph& g) : _n(g.order()), _rows(g.order()) {
    for (int v = 0; v < _n; ++v)
      _rows[v] = g.row64(v);
  }

  auto run() -> void {
    if (_n == 0)
      return;
    Cells root{_n == 64 ? ~Mask{0} : bit(_n) - 1};
    std::vector<Mask> queue{root[0]};
    refine(root, queue);
    std::vector<int> prefix;
    descend(root, prefix);
  }

  auto best_labeling() const -> const std::vector<int>& { return _best_lab; }
  auto generators() const -> const std::vector<std::vector<int>>& { return _gens; }

private:
  // Splits every cell by neighbour counts into each splitter until stable.
  // Fragments are ordered by ascending count, so the result is equivariant.
  auto refine(Cells& cells, std::vector<Mask>& queue) const -> void {
    std::size_t head = 0;
    std::vector<std::pair<int, int>> keyed;
    while (head < queue.size() && static_cast<int>(cells.size()) < _n) {
      const Mask splitter = queue[head++];
      for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const Mask cell = cells[idx];
        if (std::has_single_bit(cell))
          continue;
        keyed.clear();
        bool uniform = true;
        for (Mask rest = cell; rest; rest &= rest - 1) {
          int v = std::countr_zero(rest);
          int c = std::popcount(_rows[v] & splitter);
          if (!keyed.empty() && keyed.front().first != c)
            uniform = false;
          keyed.emplace_back(c, v);
        }
        if (uniform)
          continue;
        std::sort(keyed.begin(), keyed.end());
        Cells fragments;
        int current = -1;
        for (auto [c, v] : keyed) {
          if (c != current) {
            fragments.push_back(0);
            current = c;
          }
          fragments.back() |= bit(v);
        }
        cells[idx] = fragments[0];
        cells.insert(cells.begin() + static_cast<long>(idx) + 1, fragments.begin() + 1, fragments.end());
        queue.insert(queue.end(), fragments.begin(), fragments.end());
        idx += fragments.size() - 1;
      }
    }
  }

  auto prunable(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const -> bool {
    if (explored.empty() || _gens.empty())
      return false;
    UnionFind uf(_n);
    bool any = false;
    for (const auto& g : _gens) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return g[p] == p; });
      if (!fixes)
        continue;
      any = true;
      for (int x = 0; x < _n; ++x)
        uf.unite(x, g[x]);
    }
    if (!any)
      return false;
    int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; });
  }

  // Returns the depth to unwind to; a value below the caller's depth keeps unwinding.
  auto descend(const Cells& cells, std::vector<int>& prefix) -> int {
    const int depth = static_cast<int>(prefix.size());
    if (static_cast<int>(cells.size()) == _n)
      return leaf(cells, prefix);

    std::size_t target = 0;
    int best_size = _n + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int s = std::popcount(cells[i]);
      if (s > 1 && s < best_size) {
        best_size = s;
        target = i;
      }
    }

    std::vector<int> explored;
    for (Mask rest = cells[target]; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (prunable(v, explored, prefix))
        continue;
      explored.push_back(v);

      Cells child = cells;
      child[target] = cells[target] & ~bit(v);
      child.insert(child.begin() + static_cast<long>(target), bit(v));
      std::vector<Mask> queue{bit(v)};
      refine(child, queue);

      prefix.push_back(v);
      int jump = descend(child, prefix);
      prefix.pop_back();
      if (jump < depth)
        return jump;
    }
    return depth;
  }

  auto leaf(const Cells& cells, const std::vector<int>& prefix) -> int {
    const int depth = static_cast<int>(prefix.size());
    std::vector<int> lab(_n), pos(_n);
    for (int i = 0; i < _n; ++i) {
      lab[i] = std::countr_zero(cells[i]);
      pos[lab[i]] = i;
    }
    std::vector<Mask> code(_n, 0);
    for (int i = 0; i < _n; ++i)
      for (Mask r = _rows[lab[i]]; r; r &= r - 1)
        code[i] |= bit(pos[std::countr_zero(r)]);

    if (_best_code.empty() || code > _best_code) {
      _best_code = std::move(code);
      _best_lab = std::move(lab);
      _best_prefix = prefix;
      return depth;
    }
    if (code < _best_code)
      return depth;

    std::vector<int> gamma(_n);
    for (int i = 0; i < _n; ++i)
      gamma[_best_lab[i]] = lab[i];
    _gens.push_back(std::move(gamma));

    // The subtree below the common ancestor with the best leaf is an image
    // of an explored subtree under gamma.
    int common = 0;
    while (common < depth && common < static_cast<int>(_best_prefix.size()) &&
           prefix[common] == _best_prefix[common])
      ++common;
    return common;
  }

  int _n;
  std::vector<Mask> _rows;
  std::vector<Mask> _best_code;
  std::vector<int> _best_lab;
  std::vector<int> _best_prefix;
  std::vector<std::vector<int>> _gens;
};

} // namespace

auto canonicalize(const Graph& g) -> Canonical {
  if (g.order() > kMaxCanonVertices)
    throw Error("canonical labelling supports at most 64 vertices, got " + std::to_string(g.order()));
  Search search(g);
  search.run();

  Canonical out;
  const int n = g.order();
  out.labeling = search.best_labeling();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i)
    pos[out.labeling[i]] = i;
  out.graph = relabel(g, pos);

  UnionFind uf(n);
  for (const auto& gamma : search.generators())
    for (int v = 0; v < n; ++v)
      uf.unite(v, gamma[v]);
  out.orbit.resize(n);
  for (int v = 0; v < n; ++v)
    out.orbit[v] = uf.find(v);
  out.generators = static_cast<int>(search.generators().size());
  return out;
}

auto are_isomorphic(const Graph& a, const Graph& b) -> bool {
  if (a.order() > kMaxCanonVertices || b.order() > kMaxCanonVertices)
    throw Error("are_isomorphic supports at most 64 vertices");
  if (a.order() != b.order() || a.size() != b.size())
    return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db)
    return false;
  return canonicalize(a).graph == canonicalize(b).graph;
}

} // namespace oddspan
