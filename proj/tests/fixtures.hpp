#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "apls/graph.hpp"
#include "apls/labeling.hpp"
#include "apls/measures.hpp"
#include "apls/verifier.hpp"

namespace fixture {

using namespace apls;

// Uniform-ball witness at radius r, quantized at the smallest admissible
// alpha (or `alpha` when given) and encoded with a distance-2r coloring.
inline ProofLabeling honest_labeling(const BoundedDegreeGraph& g, int r, const Rational& eps_prime,
                                     WitnessFunction* quantized = nullptr,
                                     std::optional<std::int64_t> alpha = std::nullopt) {
  const auto w = uniform_ball_witness(g, r);
  const Rational eps = check_uniformity(g, w).max_edge_l1;
  const auto a = alpha.value_or(required_alpha(max_ball_size_actual(g, r), eps, eps_prime));
  const auto q = discretize_witness(g, w, eps, eps_prime, a);
  if (quantized) *quantized = q;
  SchemeParams params;
  params.d = g.degree_bound();
  params.r = r;
  params.eps = eps;
  params.eps_prime = eps_prime;
  params.alpha = a;
  return build_proof(g, q, distance_coloring(g, 2 * r), params);
}

// Labels travel with their vertex: v becomes perm[v].
inline ProofLabeling permute_labeling(const ProofLabeling& lab, const std::vector<Vertex>& perm) {
  ProofLabeling out = lab;
  for (Vertex v = 0; v < lab.num_vertices(); ++v) {
    out.colors[perm[v]] = lab.colors[v];
    const auto src = lab.table(v);
    std::copy(src.begin(), src.end(), out.table(perm[v]).begin());
  }
  return out;
}

// Verifier over small integer labels that accepts according to a seeded
// random function of an isomorphism-invariant summary of its ball.
struct RandomVerifier {
  using Label = int;
  int radius = 1;
  std::uint64_t seed = 0;
  Check failure = Check::custom;

  int horizon() const { return radius; }
  std::optional<Check> check(const LabeledBall<int>& ball) const {
    std::vector<int> around;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      edges += ball.adjacency[i].size();
      if (ball.depth[i] == 1) around.push_back(ball.label(static_cast<int>(i)));
    }
    std::sort(around.begin(), around.end());
    std::uint64_t h = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(ball.label(0));
    for (int a : around) h = h * 31 + static_cast<std::uint64_t>(a) + 7;
    h = h * 131 + ball.size() * 17 + edges;
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 32;
    if (h % 3 == 0) return failure;
    return std::nullopt;
  }
};

// Every simple graph on 1..4 labeled vertices, degree bound 3.
inline std::vector<BoundedDegreeGraph> all_small_graphs() {
  std::vector<BoundedDegreeGraph> out;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    }
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1u) edges.push_back(Edge::make(slots[i].first, slots[i].second));
      }
      out.push_back(BoundedDegreeGraph::build(n, 3, edges));
    }
  }
  return out;
}

// Exhaustive language check over all small graphs and all labelings with two
// labels per coordinate. Returns {instances, mismatches}, where a mismatch is a
// product decision differing from the first failure of (v1, v2).
template <class V1, class V2>
std::pair<std::size_t, std::size_t> product_language_check(const V1& v1, const V2& v2,
                                                           const std::vector<BoundedDegreeGraph>& graphs) {
  const auto v3 = product_verify(v1, v2);
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  for (const auto& g : graphs) {
    const Vertex n = g.num_vertices();
    for (unsigned m1 = 0; m1 < (1u << n); ++m1) {
      std::vector<int> l1(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) l1[v] = static_cast<int>(m1 >> v & 1u);
      const auto d1 = run_verifier(g, std::span<const int>(l1), v1);
      for (unsigned m2 = 0; m2 < (1u << n); ++m2) {
        std::vector<int> l2(static_cast<std::size_t>(n));
        std::vector<std::pair<int, int>> both;
        for (Vertex v = 0; v < n; ++v) {
          l2[v] = static_cast<int>(m2 >> v & 1u);
          both.emplace_back(l1[v], l2[v]);
        }
        const auto d2 = run_verifier(g, std::span<const int>(l2), v2);
        const auto d3 = run_verifier(g, std::span<const std::pair<int, int>>(both), v3);
        bool same = d3.accepted() == (d1.accepted() && d2.accepted());
        for (Vertex v = 0; v < n; ++v) same = same && d3.decisions[v] == (d1.decisions[v] ? d1.decisions[v] : d2.decisions[v]);
        ++instances;
        if (!same) ++mismatches;
      }
    }
  }
  return {instances, mismatches};
}

}  // namespace fixture
