#pragma once

// Brute-force reference implementations used as test oracles. They share
// nothing with the library beyond the graph container and Rational.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "apls/graph.hpp"
#include "apls/measures.hpp"
#include "apls/rational.hpp"

namespace oracle {

using apls::BoundedDegreeGraph;
using apls::Edge;
using apls::Rational;
using apls::Vertex;
using Dense = std::map<Vertex, Rational>;

inline std::vector<std::vector<Vertex>> adjacency_from_edges(const BoundedDegreeGraph& g) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// All-pairs hop distances, -1 when unreachable.
inline std::vector<std::vector<int>> all_pairs(const BoundedDegreeGraph& g) {
  const auto adj = adjacency_from_edges(g);
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<Vertex> q{static_cast<Vertex>(s)};
    dist[s][s] = 0;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop_front();
      for (Vertex v : adj[u]) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  return dist;
}

inline std::vector<Vertex> ball_set(const std::vector<std::vector<int>>& dist, Vertex x, int s) {
  std::vector<Vertex> out;
  for (std::size_t z = 0; z < dist.size(); ++z) {
    if (dist[x][z] >= 0 && dist[x][z] <= s) out.push_back(static_cast<Vertex>(z));
  }
  return out;
}

inline Dense to_dense(const apls::RationalDist& f) {
  Dense out;
  for (const auto& e : f.entries()) out[e.vertex] = Rational(e.numerator, f.denominator());
  return out;
}

inline Rational l1(const Dense& a, const Dense& b) {
  Rational total;
  for (const auto& [z, v] : a) {
    const auto it = b.find(z);
    total += (v - (it == b.end() ? Rational(0) : it->second)).abs();
  }
  for (const auto& [z, v] : b) {
    if (!a.contains(z)) total += v;
  }
  return total;
}

inline Rational mass(const Dense& a) {
  Rational total;
  for (const auto& [z, v] : a) total += v;
  return total;
}

inline std::vector<Dense> uniform_ball(const BoundedDegreeGraph& g, int r) {
  const auto dist = all_pairs(g);
  std::vector<Dense> out;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto b = ball_set(dist, x, r);
    Dense f;
    for (Vertex z : b) f[z] = Rational(1, static_cast<std::int64_t>(b.size()));
    out.push_back(std::move(f));
  }
  return out;
}

inline Rational max_edge_l1(const BoundedDegreeGraph& g, const std::vector<Dense>& w) {
  Rational best;
  for (const Edge& e : g.edges()) best = std::max(best, l1(w[e.u], w[e.v]));
  return best;
}

inline std::vector<Dense> dense_witness(const apls::WitnessFunction& w) {
  std::vector<Dense> out;
  for (const auto& f : w.dists) out.push_back(to_dense(f));
  return out;
}

// Component sizes by union-find.
inline std::vector<std::size_t> component_sizes(Vertex n, const std::vector<Edge>& edges) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  std::map<Vertex, std::size_t> sizes;
  for (Vertex v = 0; v < n; ++v) ++sizes[find(v)];
  std::vector<std::size_t> out;
  for (const auto& [root, s] : sizes) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

// f~(x) from a list of (separator, weight): per sample, a point mass on x when
// x is removed, else uniform on x's component of G - Y (union-find).
inline std::vector<Dense> separator_witness(const BoundedDegreeGraph& g,
                                            const std::vector<std::pair<std::vector<Vertex>, Rational>>& samples) {
  const Vertex n = g.num_vertices();
  std::vector<Dense> out(static_cast<std::size_t>(n));
  for (const auto& [removed, weight] : samples) {
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (Vertex y : removed) gone[y] = 1;
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Edge& e : g.edges()) {
      if (!gone[e.u] && !gone[e.v]) parent[find(e.u)] = find(e.v);
    }
    std::map<Vertex, std::vector<Vertex>> comp;
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v]) comp[find(v)].push_back(v);
    }
    for (Vertex x = 0; x < n; ++x) {
      if (gone[x]) {
        out[x][x] += weight;
        continue;
      }
      const auto& c = comp[find(x)];
      for (Vertex z : c) out[x][z] += weight / Rational(static_cast<std::int64_t>(c.size()));
    }
  }
  return out;
}

inline BoundedDegreeGraph from_pairs(Vertex n, int d, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back(Edge::make(a, b));
  return BoundedDegreeGraph::build(n, d, edges);
}

inline BoundedDegreeGraph complete(int n) {
  std::vector<std::pair<int, int>> p;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) p.emplace_back(a, b);
  }
  return from_pairs(n, std::max(2, n - 1), p);
}

inline BoundedDegreeGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
  }
  return from_pairs(a + b, std::max({2, a, b}), p);
}

inline BoundedDegreeGraph petersen() {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < 5; ++i) {
    p.emplace_back(i, (i + 1) % 5);
    p.emplace_back(i, i + 5);
    p.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return from_pairs(10, 3, p);
}

// Hub 0 joined to a cycle 1..k.
inline BoundedDegreeGraph wheel(int k) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= k; ++i) {
    p.emplace_back(0, i);
    p.emplace_back(i, i % k + 1);
  }
  return from_pairs(k + 1, std::max(3, k), p);
}

// Random simple graph with max degree <= d: tries `attempts` random pairs.
inline BoundedDegreeGraph random_graph(Vertex n, int d, int attempts, std::mt19937_64& rng) {
  std::set<Edge> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (int i = 0; i < attempts; ++i) {
      const Vertex a = pick(rng);
      const Vertex b = pick(rng);
      if (a == b || deg[a] >= d || deg[b] >= d) continue;
      if (edges.insert(Edge::make(a, b)).second) {
        ++deg[a];
        ++deg[b];
      }
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return BoundedDegreeGraph::build(n, d, list);
}

}  // namespace oracle
