#include <algorithm>

#include "pairclust/graph.hpp"
#include "pairclust/random.hpp"

namespace pairclust {

std::vector<Pair> sample_spanning_tree(const SideInfoGraph& g, std::uint64_t seed) {
  const std::size_t n = g.size();
  Rng rng(seed);
  std::vector<char> in_tree(n, 0);
  std::vector<Item> next(n, 0);
  in_tree[0] = 1;

  std::vector<Pair> tree;
  tree.reserve(n - 1);
  for (Item start = 1; start < n; ++start) {
    // Random walk until the tree is hit. Overwriting `next` on revisits
    // erases loops implicitly.
    Item u = start;
    while (!in_tree[u]) {
      auto nb = g.neighbors(u);
      next[u] = nb[rng.uniform(nb.size())];
      u = next[u];
    }
    u = start;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      tree.push_back(Pair::make(u, next[u]));
      u = next[u];
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace pairclust
