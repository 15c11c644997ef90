#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apls/graph.hpp"
#include "apls/measures.hpp"
#include "apls/planarity.hpp"
#include "apls/rational.hpp"

namespace apls {

/// Omega_t = {x : zeta(x) > t}, restricted to `member` when given.
std::vector<Vertex> threshold_set(std::span<const Rational> zeta, const Rational& t,
                                  const std::vector<char>* member = nullptr);

/// Inner boundary (vertices of A with a neighbour outside A) and boundary
/// edges, both measured inside the induced subgraph F.
struct BoundarySets {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

BoundarySets boundary(const BoundedDegreeGraph& g, const std::vector<char>& member, std::span<const Vertex> set);

/// Both sides of the area and coarea identities for zeta : V(F) -> [0, 1]:
///   sum_x sum_{y~x} |zeta(x) - zeta(y)| = 2 * int_0^1 |boundary edges of Omega_t| dt
///   sum_x zeta(x)                       =     int_0^1 |Omega_t| dt
struct AreaCoarea {
  Rational coarea_lhs;
  Rational coarea_rhs;
  Rational area_lhs;
  Rational area_rhs;

  bool holds() const { return coarea_lhs == coarea_rhs && area_lhs == area_rhs; }
};

/// Throws OutOfRange if some value lies outside [0, 1].
AreaCoarea area_coarea_check(const BoundedDegreeGraph& f, std::span<const Rational> zeta);

struct LowBoundarySet {
  std::vector<Vertex> vertices;  // sorted
  Vertex center = -1;            // z0
  Rational threshold;            // t with vertices = Omega_t
  std::size_t boundary_vertices = 0;
  std::size_t boundary_edges = 0;
};

/// Picks z0 minimizing sum_x sum_{y~x} |f(x)(z0) - f(y)(z0)| / sum_x f(x)(z0)
/// (ties by id), sets zeta(x) = f(x)(z0), and returns the first non-empty
/// superlevel set (t increasing over 0 and the distinct values of zeta) with
/// 2 * |boundary edges| <= d * eps * |set|. Throws NoQualifyingSet when none
/// exists, which means the witness is not eps-uniform relative to G.
LowBoundarySet find_low_boundary_set(const BoundedDegreeGraph& g, const RelativeWitness& w, const Rational& eps);

struct BlockInfo {
  Vertex center = -1;
  Rational threshold;
  std::size_t boundary_vertices = 0;
  std::size_t boundary_edges = 0;
};

struct PartitionResult {
  std::vector<std::vector<Vertex>> blocks;  // in extraction order
  std::vector<BlockInfo> info;
  std::vector<Edge> removed;                // sorted
  Rational eps;
  std::int64_t ball_bound = 0;              // max |B_2r(x, G)|
  std::optional<std::int64_t> tree_bound;   // N^d_2r when representable

  std::size_t max_block() const;
  /// min(tree_bound, ball_bound).
  std::int64_t certified_block_bound() const;
  /// d^2 eps / 2 * |V|: the guaranteed ceiling on |removed|.
  Rational removal_budget(const BoundedDegreeGraph& g) const;
};

/// Greedy loop: project w onto the remaining induced subgraph, cut out a low
/// boundary set, delete its outgoing edges, repeat until no vertex remains.
/// Requires check_uniformity(g, w).max_edge_l1 <= eps.
PartitionResult extract_partition(const BoundedDegreeGraph& g, const WitnessFunction& w, const Rational& eps);

enum class Normalization { per_edge, per_vertex };

struct HyperfiniteReport {
  Rational removed_per_edge;    // |W| / |E|
  Rational removed_per_vertex;  // |W| / |V|
  std::size_t max_block = 0;
  bool is_partition = false;    // blocks cover V disjointly, W only crosses blocks
  bool ok = false;
};

HyperfiniteReport check_hyperfinite(const BoundedDegreeGraph& g, const PartitionResult& partition,
                                    const Rational& eps, std::int64_t K,
                                    Normalization norm = Normalization::per_vertex);

struct EditDistanceBound {
  bool feasible = false;
  Rational bound;                        // |W| / |V| when feasible
  std::optional<std::size_t> offending;  // block index violating the predicate
};

EditDistanceBound edit_distance_upper_bound(const BoundedDegreeGraph& g, const PartitionResult& partition,
                                            Predicate predicate);

}  // namespace apls
