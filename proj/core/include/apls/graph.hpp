#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace apls {

using Vertex = std::int32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph with maximum degree at most d.
/// Adjacency is kept in CSR form with every neighbor list sorted ascending.
class BoundedDegreeGraph {
 public:
  BoundedDegreeGraph() = default;

  /// Validates and builds. Throws NonSimple on loops/duplicates/bad ids and
  /// DegreeExceeded when some vertex has more than d neighbors.
  static BoundedDegreeGraph build(Vertex n, int d, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  int degree_bound() const { return d_; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// All edges with u < v, ascending lexicographic.
  std::vector<Edge> edges() const;

  friend bool operator==(const BoundedDegreeGraph&, const BoundedDegreeGraph&) = default;

 private:
  Vertex n_ = 0;
  int d_ = 2;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Induced neighbourhood B_s(x, G) re-indexed locally in BFS order
/// (ties by ascending parent id). Local vertex 0 is the center.
struct RootedBall {
  Vertex center = 0;
  int radius_bound = 0;
  std::vector<Vertex> vertices;            // local -> parent id
  std::vector<int> distance;               // local -> d_G(center, .)
  std::vector<std::vector<int>> adjacency; // local ids, sorted

  std::size_t size() const { return vertices.size(); }
  std::size_t num_edges() const;
  /// Maximum distance from the center actually realized.
  int actual_radius() const { return distance.empty() ? 0 : distance.back(); }
  /// Local index of a parent vertex, or -1.
  int local_index(Vertex parent) const;
};

/// Reusable BFS scratch space for repeated ball queries on one graph.
/// Not thread-safe; use one per thread.
class BallExtractor {
 public:
  explicit BallExtractor(const BoundedDegreeGraph& g);

  RootedBall ball(Vertex x, int s);
  /// Vertex ids of B_s(x, G) in BFS order; distances written to `dist`.
  const std::vector<Vertex>& reach(Vertex x, int s, std::vector<int>* dist = nullptr);

 private:
  const BoundedDegreeGraph* g_;
  std::vector<int> stamp_;
  std::vector<int> local_;
  int epoch_ = 0;
  std::vector<Vertex> order_;
  std::vector<int> dist_;
};

RootedBall ball(const BoundedDegreeGraph& g, Vertex x, int s);

/// Single-source BFS distances, -1 for unreachable (or beyond max_depth when
/// max_depth >= 0).
std::vector<int> bfs_distances(const BoundedDegreeGraph& g, Vertex source, int max_depth = -1);

/// N^d_r: size of the radius-r ball in the infinite d-regular tree.
/// Throws std::overflow_error if the value does not fit into 64 bits.
std::int64_t max_ball_size_bound(int d, int r);

/// max over x of |B_r(x, G)|.
std::int64_t max_ball_size_actual(const BoundedDegreeGraph& g, int r);

/// Graph with the edges in `removed` deleted. Throws NonSimple if some edge
/// of `removed` is not an edge of g.
BoundedDegreeGraph remove_edges(const BoundedDegreeGraph& g, std::span<const Edge> removed);

/// Connected components, each sorted, ordered by minimum vertex id.
std::vector<std::vector<Vertex>> components(const BoundedDegreeGraph& g);

/// Components of the subgraph induced on vertices with keep[v] != 0.
std::vector<std::vector<Vertex>> components_of_induced(const BoundedDegreeGraph& g,
                                                       const std::vector<char>& keep);

/// Subgraph induced on `vertices` (any order); vertex i of the result is
/// vertices[i]. Degree bound is inherited.
BoundedDegreeGraph induced_subgraph(const BoundedDegreeGraph& g, std::span<const Vertex> vertices);

/// Graph of a rooted ball on its local ids.
BoundedDegreeGraph ball_graph(const RootedBall& b, int d);

/// Disjoint union; vertices of b are shifted by a.num_vertices().
BoundedDegreeGraph disjoint_union(const BoundedDegreeGraph& a, const BoundedDegreeGraph& b);

/// Relabels vertex v as perm[v].
BoundedDegreeGraph permute(const BoundedDegreeGraph& g, std::span<const Vertex> perm);

}  // namespace apls
