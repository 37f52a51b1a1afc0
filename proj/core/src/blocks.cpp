#include "oddspan/blocks.hpp"

#include <algorithm>

namespace oddspan {

auto block_decomposition(const Graph& g) -> BlockDecomposition {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame
  {
    int v;
    int parent;
    int next; // next neighbour candidate to scan
    int children;
  };
  std::vector<Frame> stack;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0)
      continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0, 0});

    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      int w = f.next == 0 ? nb.first() : nb.next(f.next - 1);
      if (w >= 0) {
        f.next = w + 1;
        if (w == f.parent)
          continue;
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }

      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1)
          out.cut_vertices.set(done.v);
        continue;
      }
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) {
        if (up.parent >= 0)
          out.cut_vertices.set(up.v);
        VertexSet block;
        while (true) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.set(e.first);
          block.set(e.second);
          if (e.first == up.v && e.second == done.v)
            break;
        }
        out.blocks.push_back(block);
      }
    }
  }
  return out;
}

} // namespace oddspan
