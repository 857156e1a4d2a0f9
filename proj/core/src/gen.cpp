#include "pairclust/gen.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "int128.hpp"
#include "pairclust/error.hpp"
#include "pairclust/random.hpp"

namespace pairclust {
namespace {

std::uint64_t pair_key(Item a, Item b) {
  Pair p = Pair::make(a, b);
  return (static_cast<std::uint64_t>(p.u) << 32) | p.v;
}

// Inverse of the row-major ranking of pairs u < v over n items.
Pair unrank_pair(std::uint64_t index, std::uint64_t n) {
  // Row u starts at offset(u) = u * (2n - u - 1) / 2.
  auto offset = [n](std::uint64_t u) { return u * (2 * n - u - 1) / 2; };
  std::uint64_t lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    std::uint64_t mid = (lo + hi) / 2;
    if (offset(mid) <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::uint64_t u = lo;
  const std::uint64_t v = u + 1 + (index - offset(u));
  return {static_cast<Item>(u), static_cast<Item>(v)};
}

// Robert Floyd's sampling of `count` distinct integers from [0, universe).
std::vector<std::uint64_t> sample_distinct(std::uint64_t universe, std::uint64_t count, Rng& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(count) * 2);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t j = universe - count; j < universe; ++j) {
    std::uint64_t t = rng.uniform(j + 1);
    std::uint64_t pick = chosen.contains(t) ? j : t;
    chosen.insert(pick);
    out.push_back(pick);
  }
  return out;
}

}  // namespace

Clustering planted_clustering(std::span<const std::size_t> sizes, std::uint64_t seed) {
  std::size_t n = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw Error("planted cluster sizes must be positive");
    n += s;
  }
  if (n == 0) throw Error("planted clustering needs at least one item");
  std::vector<Item> order(n);
  std::iota(order.begin(), order.end(), Item{0});
  Rng rng(seed);
  shuffle(std::span<Item>(order), rng);
  std::vector<std::uint32_t> labels(n);
  std::size_t pos = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    for (std::size_t i = 0; i < sizes[c]; ++i) labels[order[pos++]] = static_cast<std::uint32_t>(c);
  }
  return Clustering::from_labels(std::span<const std::uint32_t>(labels));
}

Clustering planted_clustering(std::size_t n, std::span<const std::size_t> sizes, std::uint64_t seed) {
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (total != n) {
    throw Error("cluster sizes sum to " + std::to_string(total) + " but n=" + std::to_string(n));
  }
  return planted_clustering(sizes, seed);
}

Clustering planted_clustering_balanced(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > n) throw Error("balanced planted clustering needs 1 <= k <= n");
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
  return planted_clustering(sizes, seed);
}

TrainingSet sample_training_set(const Clustering& d, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t n = d.size();
  Rng rng(seed);
  std::vector<LabeledPair> entries;
  entries.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto v = static_cast<Item>(rng.uniform(n));
    const auto w = static_cast<Item>(rng.uniform(n));
    entries.push_back({v, w, static_cast<std::uint8_t>(d.label(v) == d.label(w) ? 1 : 0)});
  }
  return TrainingSet(d.size(), std::move(entries));
}

SimilarityGraph perturb_similarity(const Clustering& d, std::uint64_t flips, std::uint64_t seed) {
  const std::uint64_t n = d.size();
  const std::uint64_t total_pairs = n * (n - 1) / 2;
  if (flips > total_pairs) {
    throw Error("cannot flip " + std::to_string(flips) + " distinct pairs among " + std::to_string(total_pairs));
  }
  Rng rng(seed);
  auto picks = sample_distinct(total_pairs, flips, rng);

  std::unordered_set<std::uint64_t> removed;
  std::vector<std::vector<Item>> adjacency(n);
  for (std::uint64_t index : picks) {
    Pair p = unrank_pair(index, n);
    if (d.label(p.u) == d.label(p.v)) {
      removed.insert(pair_key(p.u, p.v));
    } else {
      adjacency[p.u].push_back(p.v);
      adjacency[p.v].push_back(p.u);
    }
  }
  for (const auto& members : d.clusters()) {
    for (Item v : members) {
      for (Item w : members) {
        if (v != w && (removed.empty() || !removed.contains(pair_key(v, w)))) adjacency[v].push_back(w);
      }
    }
  }
  return SimilarityGraph::from_adjacency(std::move(adjacency));
}

AdversarialT2 adversarial_t2_construction(const Clustering& d, std::uint64_t sigma) {
  if (sigma == 0) throw Error("adversarial_t2 requires sigma > 0");
  auto members = d.clusters();
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return members[a].size() < members[b].size(); });

  const detail::uint128 two_sigma = static_cast<detail::uint128>(sigma) * 2;
  detail::uint128 square_sum = 0;
  for (const auto& m : members) square_sum += static_cast<detail::uint128>(m.size()) * m.size();

  AdversarialT2 out{Clustering::singletons(1), {}, false, 0, 0};
  std::vector<std::uint32_t> labels(d.size(), 0);
  std::uint32_t next = 0;
  auto halve = [&](const std::vector<Item>& cluster) {
    const std::size_t upper = (cluster.size() + 1) / 2;
    for (std::size_t i = 0; i < cluster.size(); ++i) labels[cluster[i]] = i < upper ? next : next + 1;
    next += 2;
  };
  auto keep = [&](const std::vector<Item>& cluster) {
    for (Item v : cluster) labels[v] = next;
    ++next;
  };

  if (two_sigma >= square_sum) {
    out.halved_all = true;
    for (std::size_t rank = 0; rank < order.size(); ++rank) halve(members[order[rank]]);
  } else {
    // Pivot: first rank whose cumulative sum of d^2 exceeds 2 sigma.
    detail::uint128 prefix = 0;
    std::size_t pivot = 0;
    while (true) {
      const std::size_t size = members[order[pivot]].size();
      const detail::uint128 next_prefix = prefix + static_cast<detail::uint128>(size) * size;
      if (two_sigma < next_prefix) break;
      prefix = next_prefix;
      ++pivot;
    }
    const auto& pivot_cluster = members[order[pivot]];
    // omega = sigma - prefix / 2; c = floor(omega / (2 d)) = floor(2 omega / (4 d)).
    const detail::uint128 two_omega = two_sigma - prefix;
    const auto split = static_cast<std::uint64_t>(two_omega / (4 * static_cast<detail::uint128>(pivot_cluster.size())));
    out.pivot = pivot;
    out.split_size = split;
    for (std::size_t rank = 0; rank < pivot; ++rank) halve(members[order[rank]]);
    for (std::size_t i = 0; i < pivot_cluster.size(); ++i) labels[pivot_cluster[i]] = i < split ? next : next + 1;
    next += 2;
    for (std::size_t rank = pivot + 1; rank < order.size(); ++rank) keep(members[order[rank]]);
  }
  out.partition = Clustering::from_labels(std::span<const std::uint32_t>(labels));
  out.graph = clustering_to_similarity(out.partition);
  return out;
}

SimilarityGraph adversarial_t2(const Clustering& d, std::uint64_t sigma) {
  return adversarial_t2_construction(d, sigma).graph;
}

AdversarialInstanceT4 adversarial_t4(const SideInfoGraph& g, std::uint64_t b, std::uint64_t k, std::uint64_t m,
                                     std::uint64_t seed, const ResistanceOptions& options) {
  const std::uint64_t n = g.size();
  if (b < 4 || b > n - 1) throw Error("adversarial_t4 requires 4 <= b <= n-1");
  if (k <= 2) throw Error("adversarial_t4 requires k > 2");
  if (4 * m >= n * n) throw Error("adversarial_t4 requires m < n^2/4");

  AdversarialInstanceT4 inst{Clustering::singletons(1), {}, {}, {}, {}, 0, b, k, m, 0, false, 0.0};

  // r(v): sum of effective resistances of the edges at v.
  const std::vector<double> edge_r = edge_resistances(g, options);
  std::vector<double> node_r(n, 0.0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    node_r[g.edges()[i].u] += edge_r[i];
    node_r[g.edges()[i].v] += edge_r[i];
  }
  std::vector<Item> by_r(n);
  std::iota(by_r.begin(), by_r.end(), Item{0});
  std::stable_sort(by_r.begin(), by_r.end(), [&](Item a, Item c) { return node_r[a] < node_r[c]; });
  const std::uint64_t half_b = b / 2;
  inst.v_b.assign(by_r.begin(), by_r.begin() + static_cast<std::ptrdiff_t>(half_b));
  std::sort(inst.v_b.begin(), inst.v_b.end());

  const std::uint64_t f = std::max<std::uint64_t>(b * m / (n * n), 1);
  std::uint64_t z = std::min<std::uint64_t>(f, (k - 1) / 2);
  Rng rng(derive_seed(seed, 0));
  if (m == 0 || half_b < (n * n) / (2 * m)) {
    inst.block_size = m == 0 ? 0 : (n * n) / (2 * m);
    z = 1;
    inst.blocks.push_back(inst.v_b);
  } else {
    inst.block_size = (n * n) / (2 * m);
    const std::uint64_t fit = half_b / inst.block_size;
    if (z > fit) {
      z = fit;
      inst.z_clamped = true;
    }
    std::vector<Item> pool = inst.v_b;
    shuffle(std::span<Item>(pool), rng);
    for (std::uint64_t j = 0; j < z; ++j) {
      auto first = pool.begin() + static_cast<std::ptrdiff_t>(j * inst.block_size);
      std::vector<Item> block(first, first + static_cast<std::ptrdiff_t>(inst.block_size));
      std::sort(block.begin(), block.end());
      inst.blocks.push_back(std::move(block));
    }
  }
  inst.z = static_cast<std::size_t>(z);

  // Training pairs, drawn before the labeling they will carry.
  Rng pair_rng(derive_seed(seed, 1));
  std::vector<std::pair<Item, Item>> drawn(static_cast<std::size_t>(m));
  for (auto& [v, w] : drawn) {
    v = static_cast<Item>(pair_rng.uniform(n));
    w = static_cast<Item>(pair_rng.uniform(n));
  }

  // H_j: members of block j with no training pair to another member of the
  // same block (self-pairs carry no information and are ignored).
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> block_of(n, kNone);
  for (std::size_t j = 0; j < inst.blocks.size(); ++j) {
    for (Item v : inst.blocks[j]) block_of[v] = static_cast<std::uint32_t>(j);
  }
  std::vector<char> touched(n, 0);
  for (const auto& [v, w] : drawn) {
    if (v != w && block_of[v] != kNone && block_of[v] == block_of[w]) touched[v] = touched[w] = 1;
  }
  for (const auto& block : inst.blocks) {
    std::vector<Item> h;
    for (Item v : block) {
      if (!touched[v]) h.push_back(v);
    }
    inst.h_sets.push_back(std::move(h));
  }

  // Labels: H_j split by fair coins into classes 2j and 2j+1, everything
  // else in class k-1.
  Rng label_rng(derive_seed(seed, 2));
  std::vector<std::uint64_t> labels(n, k - 1);
  for (std::size_t j = 0; j < inst.h_sets.size(); ++j) {
    for (Item v : inst.h_sets[j]) labels[v] = 2 * j + label_rng.uniform(2);
  }
  inst.y = Clustering::from_labels(std::span<const std::uint64_t>(labels));

  std::vector<LabeledPair> entries;
  entries.reserve(drawn.size());
  for (const auto& [v, w] : drawn) {
    entries.push_back({v, w, static_cast<std::uint8_t>(inst.y.label(v) == inst.y.label(w) ? 1 : 0)});
  }
  inst.s = TrainingSet(n, std::move(entries));
  inst.phi_r = resistance_weighted_cut_size(g, inst.y, edge_r);

  // Invariants of the construction.
  std::vector<std::uint32_t> h_of(n, kNone);
  for (std::size_t j = 0; j < inst.h_sets.size(); ++j) {
    for (Item v : inst.h_sets[j]) {
      if (h_of[v] != kNone) throw Error("adversarial_t4: H sets overlap");
      if (!std::binary_search(inst.v_b.begin(), inst.v_b.end(), v)) throw Error("adversarial_t4: H set leaves V_b");
      h_of[v] = static_cast<std::uint32_t>(j);
    }
  }
  for (const auto& [v, w] : drawn) {
    if (v != w && h_of[v] != kNone && h_of[v] == h_of[w]) throw Error("adversarial_t4: training pair inside an H set");
  }
  if (inst.v_b.size() != half_b) throw Error("adversarial_t4: |V_b| != floor(b/2)");
  if (inst.z > (k - 1) / 2) throw Error("adversarial_t4: z exceeds floor((k-1)/2)");
  if (inst.y.cluster_count() > k) throw Error("adversarial_t4: more than k clusters");
  if (inst.phi_r > static_cast<double>(b)) throw Error("adversarial_t4: resistance-weighted cut-size exceeds b");
  return inst;
}

SimilarityGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Pair> pairs;
  for (Item u = 0; u < n; ++u) {
    for (Item v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) pairs.push_back({u, v});
    }
  }
  return SimilarityGraph(n, pairs);
}

std::size_t isolated_count(const SimilarityGraph& g) {
  std::size_t count = 0;
  for (Item v = 0; v < g.size(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

SideInfoGraph random_connected_graph(std::size_t n, double extra_p, std::uint64_t seed) {
  if (n == 0) throw Error("graph needs at least one node");
  Rng rng(seed);
  std::vector<Pair> edges;
  for (Item v = 1; v < n; ++v) edges.push_back(Pair::make(static_cast<Item>(rng.uniform(v)), v));
  if (extra_p > 0.0) {
    for (Item u = 0; u < n; ++u) {
      for (Item v = u + 1; v < n; ++v) {
        if (rng.bernoulli(extra_p)) edges.push_back({u, v});
      }
    }
  }
  return SideInfoGraph(n, edges);
}

}  // namespace pairclust
