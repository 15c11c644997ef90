#include "apls/separators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "apls/errors.hpp"

namespace apls {

namespace {

std::vector<char> keep_mask(Vertex n, std::span<const Vertex> removed) {
  std::vector<char> keep(static_cast<std::size_t>(n), 1);
  for (Vertex y : removed) keep[y] = 0;
  return keep;
}

SeparatorDistribution uniform_over(const BoundedDegreeGraph& g, std::int64_t K,
                                   std::vector<std::vector<Vertex>> sets) {
  const auto count = static_cast<std::int64_t>(sets.size());
  std::vector<std::pair<std::vector<Vertex>, Rational>> samples;
  samples.reserve(sets.size());
  for (auto& s : sets) samples.emplace_back(std::move(s), Rational(1, count));
  return SeparatorDistribution::build(g, K, std::move(samples));
}

}  // namespace

SeparatorDistribution SeparatorDistribution::build(const BoundedDegreeGraph& g, std::int64_t K,
                                                   std::vector<std::pair<std::vector<Vertex>, Rational>> samples) {
  if (K < 0) throw InvalidDistribution("K must be non-negative");
  if (samples.empty()) throw InvalidDistribution("empty separator distribution");
  std::map<std::vector<Vertex>, Rational> merged;
  Rational total;
  for (auto& [set, weight] : samples) {
    if (weight <= Rational(0)) throw InvalidDistribution("non-positive separator weight");
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw InvalidDistribution("separator lists a vertex twice");
    }
    for (Vertex y : set) {
      if (!g.contains(y)) throw InvalidDistribution("separator vertex " + std::to_string(y) + " out of range");
    }
    total += weight;
    merged[set] += weight;
  }
  if (total != Rational(1)) throw InvalidDistribution("separator weights sum to " + total.str());
  SeparatorDistribution dist;
  dist.K_ = K;
  dist.n_ = g.num_vertices();
  for (auto& [set, weight] : merged) {
    if (!is_k_separator(g, set, K)) {
      throw InvalidDistribution("sample of size " + std::to_string(set.size()) + " is not a " +
                                std::to_string(K) + "-separator");
    }
    dist.support_.push_back({SeparatorSample{set, K}, weight});
  }
  return dist;
}

std::int64_t largest_component_without(const BoundedDegreeGraph& g, std::span<const Vertex> removed) {
  std::int64_t best = 0;
  for (const auto& comp : components_of_induced(g, keep_mask(g.num_vertices(), removed))) {
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(comp.size()));
  }
  return best;
}

bool is_k_separator(const BoundedDegreeGraph& g, std::span<const Vertex> removed, std::int64_t K) {
  return largest_component_without(g, removed) <= K;
}

std::vector<Rational> marginals(const SeparatorDistribution& dist) {
  std::vector<Rational> out(static_cast<std::size_t>(dist.num_vertices()));
  for (const auto& ws : dist.support()) {
    for (Vertex y : ws.sample.removed) out[y] += ws.weight;
  }
  return out;
}

Marginal max_marginal(const SeparatorDistribution& dist) {
  const auto m = marginals(dist);
  Marginal best;
  for (Vertex v = 0; v < static_cast<Vertex>(m.size()); ++v) {
    if (best.vertex < 0 || m[v] > best.value) best = {m[v], v};
  }
  return best;
}

SeparatorDistribution path_shift_distribution(const BoundedDegreeGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("shift period must be positive");
  if (g.max_degree() > 2) throw InvalidDistribution("path shifts need a path or a cycle");
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < g.num_vertices(); ++v) sets[v % k].push_back(v);
  std::int64_t K = 0;
  for (const auto& s : sets) K = std::max(K, largest_component_without(g, s));
  return uniform_over(g, K, std::move(sets));
}

SeparatorDistribution grid_shift_distribution(const BoundedDegreeGraph& g, int rows, int cols, int k) {
  if (k < 1) throw std::invalid_argument("shift period must be positive");
  if (static_cast<std::int64_t>(rows) * cols != g.num_vertices()) {
    throw InvalidDistribution("grid dimensions do not match the graph");
  }
  std::vector<std::vector<Vertex>> sets;
  for (int s1 = 0; s1 < k; ++s1) {
    for (int s2 = 0; s2 < k; ++s2) {
      std::vector<Vertex> y;
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          if (i % k == s1 || j % k == s2) y.push_back(i * cols + j);
        }
      }
      sets.push_back(std::move(y));
    }
  }
  const std::int64_t K = static_cast<std::int64_t>(k - 1) * (k - 1);
  return uniform_over(g, K, std::move(sets));
}

SeparatorDistribution tree_depth_shift_distribution(const BoundedDegreeGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("shift period must be positive");
  if (g.num_vertices() == 0) throw InvalidDistribution("empty tree");
  if (g.num_edges() + 1 != static_cast<std::size_t>(g.num_vertices()) || components(g).size() != 1) {
    throw InvalidDistribution("depth shifts need a tree");
  }
  const std::vector<int> depth = bfs_distances(g, 0);
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < g.num_vertices(); ++v) sets[depth[v] % k].push_back(v);
  return uniform_over(g, max_ball_size_bound(g.degree_bound(), k - 1), std::move(sets));
}

std::vector<std::pair<Vertex, Rational>> separator_contribution(const BoundedDegreeGraph& g,
                                                                const SeparatorSample& sample,
                                                                const Rational& weight, Vertex x) {
  if (std::binary_search(sample.removed.begin(), sample.removed.end(), x)) return {{x, weight}};
  const auto keep = keep_mask(g.num_vertices(), sample.removed);
  std::vector<Vertex> comp{x};
  std::vector<char> seen(keep.size(), 0);
  seen[x] = 1;
  for (std::size_t head = 0; head < comp.size(); ++head) {
    for (Vertex w : g.neighbors(comp[head])) {
      if (keep[w] && !seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  const Rational share = weight / Rational(static_cast<std::int64_t>(comp.size()));
  std::vector<std::pair<Vertex, Rational>> out;
  out.reserve(comp.size());
  for (Vertex z : comp) out.emplace_back(z, share);
  return out;
}

WitnessFunction witness_from_separators(const BoundedDegreeGraph& g, const SeparatorDistribution& dist) {
  if (dist.num_vertices() != g.num_vertices()) throw InvalidDistribution("distribution belongs to another graph");
  const Vertex n = g.num_vertices();

  struct Split {
    std::vector<int> component_of;  // -1 for removed vertices
    std::vector<std::vector<Vertex>> comps;
  };
  std::vector<Split> splits;
  splits.reserve(dist.support().size());
  std::int64_t common = 1;
  for (const auto& ws : dist.support()) {
    Split s;
    s.comps = components_of_induced(g, keep_mask(n, ws.sample.removed));
    if (!is_k_separator(g, ws.sample.removed, dist.K())) throw InvalidDistribution("sample is not a K-separator");
    s.component_of.assign(static_cast<std::size_t>(n), -1);
    std::int64_t size_lcm = 1;
    for (std::size_t c = 0; c < s.comps.size(); ++c) {
      for (Vertex v : s.comps[c]) s.component_of[v] = static_cast<int>(c);
      size_lcm = checked_lcm(size_lcm, static_cast<std::int64_t>(s.comps[c].size()));
    }
    common = checked_lcm(common, checked_mul(ws.weight.den(), size_lcm));
    splits.push_back(std::move(s));
  }

  WitnessFunction w;
  w.radius = static_cast<int>(std::min<std::int64_t>(dist.K(), n));
  w.dists.reserve(static_cast<std::size_t>(n));
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> touched;
  for (Vertex x = 0; x < n; ++x) {
    touched.clear();
    auto add = [&](Vertex z, std::int64_t amount) {
      if (acc[z] == 0) touched.push_back(z);
      acc[z] = checked_add(acc[z], amount);
    };
    for (std::size_t i = 0; i < splits.size(); ++i) {
      const Rational& mu = dist.support()[i].weight;
      const std::int64_t scaled = checked_mul(mu.num(), common / mu.den());  // mu * common
      const int c = splits[i].component_of[x];
      if (c < 0) {
        add(x, scaled);
      } else {
        const auto& comp = splits[i].comps[c];
        const std::int64_t share = scaled / static_cast<std::int64_t>(comp.size());
        for (Vertex z : comp) add(z, share);
      }
    }
    std::vector<RationalDist::Entry> entries;
    entries.reserve(touched.size());
    for (Vertex z : touched) {
      entries.push_back({z, acc[z]});
      acc[z] = 0;
    }
    w.dists.push_back(RationalDist::from_entries(common, std::move(entries)));
  }
  return w;
}

SeparatorDistribution minimax_separator_search(const BoundedDegreeGraph& g, std::int64_t K, int rounds,
                                               std::uint64_t seed) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  if (rounds < 1) throw std::invalid_argument("need at least one round");
  const Vertex n = g.num_vertices();
  if (K >= n) return SeparatorDistribution::build(g, K, {{{}, Rational(1)}});

  std::mt19937_64 rng(seed);
  std::vector<Vertex> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0);
  for (std::size_t i = rank.size() - 1; i > 0; --i) std::swap(rank[i], rank[rng() % (i + 1)]);

  constexpr double kBoost = 1.5;
  std::vector<double> weight(static_cast<std::size_t>(n), 1.0);
  auto lighter = [&](Vertex a, Vertex b) {
    if (weight[a] != weight[b]) return weight[a] < weight[b];
    return rank[a] < rank[b];
  };

  std::map<std::vector<Vertex>, std::int64_t> counts;
  for (int round = 0; round < rounds; ++round) {
    std::vector<char> keep(static_cast<std::size_t>(n), 1);
    for (;;) {
      bool oversized = false;
      for (const auto& comp : components_of_induced(g, keep)) {
        if (static_cast<std::int64_t>(comp.size()) <= K) continue;
        oversized = true;
        keep[*std::min_element(comp.begin(), comp.end(), lighter)] = 0;
      }
      if (!oversized) break;
    }
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < n; ++v) {
      if (!keep[v]) chosen.push_back(v);
    }
    // Heaviest first: put back every vertex that is not needed.
    std::sort(chosen.begin(), chosen.end(), [&](Vertex a, Vertex b) { return lighter(b, a); });
    for (Vertex v : chosen) {
      keep[v] = 1;
      std::int64_t merged = 1;
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> stack{v};
      seen[v] = 1;
      while (!stack.empty() && merged <= K) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
          if (keep[w] && !seen[w]) {
            seen[w] = 1;
            ++merged;
            stack.push_back(w);
          }
        }
      }
      if (merged > K) keep[v] = 0;
    }
    std::vector<Vertex> removed;
    for (Vertex v = 0; v < n; ++v) {
      if (!keep[v]) {
        removed.push_back(v);
        weight[v] *= kBoost;
      }
    }
    ++counts[removed];
  }

  std::vector<std::pair<std::vector<Vertex>, Rational>> samples;
  for (auto& [set, count] : counts) samples.emplace_back(set, Rational(count, rounds));
  return SeparatorDistribution::build(g, K, std::move(samples));
}

}  // namespace apls
