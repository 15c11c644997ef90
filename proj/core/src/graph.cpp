#include "apls/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "apls/errors.hpp"
#include "apls/rational.hpp"

namespace apls {

BoundedDegreeGraph BoundedDegreeGraph::build(Vertex n, int d, std::span<const Edge> edges) {
  if (n < 0) throw NonSimple("negative vertex count");
  if (d < 2) throw std::invalid_argument("degree bound must be at least 2");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw NonSimple("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw NonSimple("loop at vertex " + std::to_string(e.u));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  BoundedDegreeGraph g;
  g.n_ = n;
  g.d_ = d;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw NonSimple("parallel edge at vertex " + std::to_string(v));
    }
    if (static_cast<int>(list.size()) > d) {
      throw DegreeExceeded("vertex " + std::to_string(v) + " has degree " + std::to_string(list.size()) +
                           " > " + std::to_string(d));
    }
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_.back());
  for (auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

int BoundedDegreeGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool BoundedDegreeGraph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> BoundedDegreeGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t RootedBall::num_edges() const {
  std::size_t total = 0;
  for (const auto& list : adjacency) total += list.size();
  return total / 2;
}

int RootedBall::local_index(Vertex parent) const {
  const auto it = std::find(vertices.begin(), vertices.end(), parent);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

BallExtractor::BallExtractor(const BoundedDegreeGraph& g)
    : g_(&g), stamp_(static_cast<std::size_t>(g.num_vertices()), 0), local_(stamp_.size(), -1) {}

const std::vector<Vertex>& BallExtractor::reach(Vertex x, int s, std::vector<int>* dist) {
  if (!g_->contains(x)) throw std::out_of_range("vertex " + std::to_string(x) + " not in graph");
  if (s < 0) throw std::invalid_argument("negative radius");
  ++epoch_;
  order_.clear();
  dist_.clear();
  order_.push_back(x);
  dist_.push_back(0);
  stamp_[x] = epoch_;
  local_[x] = 0;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex u = order_[head];
    const int du = dist_[head];
    if (du == s) continue;
    for (Vertex w : g_->neighbors(u)) {
      if (stamp_[w] == epoch_) continue;
      stamp_[w] = epoch_;
      local_[w] = static_cast<int>(order_.size());
      order_.push_back(w);
      dist_.push_back(du + 1);
    }
  }
  if (dist != nullptr) *dist = dist_;
  return order_;
}

RootedBall BallExtractor::ball(Vertex x, int s) {
  reach(x, s);
  RootedBall b;
  b.center = x;
  b.radius_bound = s;
  b.vertices = order_;
  b.distance = dist_;
  b.adjacency.resize(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (Vertex w : g_->neighbors(order_[i])) {
      if (stamp_[w] == epoch_) b.adjacency[i].push_back(local_[w]);
    }
    std::sort(b.adjacency[i].begin(), b.adjacency[i].end());
  }
  return b;
}

RootedBall ball(const BoundedDegreeGraph& g, Vertex x, int s) {
  BallExtractor ex(g);
  return ex.ball(x, s);
}

std::vector<int> bfs_distances(const BoundedDegreeGraph& g, Vertex source, int max_depth) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (max_depth >= 0 && dist[u] == max_depth) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::int64_t max_ball_size_bound(int d, int r) {
  if (d < 2) throw std::invalid_argument("degree bound must be at least 2");
  if (r < 0) throw std::invalid_argument("negative radius");
  if (d == 2) return checked_add(checked_mul(2, r), 1);
  // 1 + d * (1 + (d-1) + ... + (d-1)^(r-1))
  std::int64_t layer = d;
  std::int64_t total = 1;
  for (int i = 1; i <= r; ++i) {
    total = checked_add(total, layer);
    if (i < r) layer = checked_mul(layer, d - 1);
  }
  return total;
}

std::int64_t max_ball_size_actual(const BoundedDegreeGraph& g, int r) {
  BallExtractor ex(g);
  std::int64_t best = 0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(ex.reach(x, r).size()));
  }
  return best;
}

BoundedDegreeGraph remove_edges(const BoundedDegreeGraph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) {
    e = Edge::make(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
      throw NonSimple("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    }
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  }
  return BoundedDegreeGraph::build(g.num_vertices(), g.degree_bound(), keep);
}

std::vector<std::vector<Vertex>> components_of_induced(const BoundedDegreeGraph& g,
                                                       const std::vector<char>& keep) {
  const Vertex n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || !keep[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w] && keep[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const BoundedDegreeGraph& g) {
  return components_of_induced(g, std::vector<char>(static_cast<std::size_t>(g.num_vertices()), 1));
}

BoundedDegreeGraph induced_subgraph(const BoundedDegreeGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const int j = local[w];
      if (j > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return BoundedDegreeGraph::build(static_cast<Vertex>(vertices.size()), g.degree_bound(), edges);
}

BoundedDegreeGraph ball_graph(const RootedBall& b, int d) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < b.adjacency.size(); ++i) {
    for (int j : b.adjacency[i]) {
      if (j > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return BoundedDegreeGraph::build(static_cast<Vertex>(b.size()), d, edges);
}

BoundedDegreeGraph disjoint_union(const BoundedDegreeGraph& a, const BoundedDegreeGraph& b) {
  std::vector<Edge> edges = a.edges();
  const Vertex shift = a.num_vertices();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return BoundedDegreeGraph::build(a.num_vertices() + b.num_vertices(),
                                   std::max(a.degree_bound(), b.degree_bound()), edges);
}

BoundedDegreeGraph permute(const BoundedDegreeGraph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::make(perm[e.u], perm[e.v]));
  return BoundedDegreeGraph::build(g.num_vertices(), g.degree_bound(), edges);
}

}  // namespace apls
