#include "apls/hyperfinite.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "apls/errors.hpp"

namespace apls {

namespace {

__int128 abs_wide(__int128 v) { return v < 0 ? -v : v; }

std::vector<char> as_mask(Vertex n, std::span<const Vertex> set) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : set) in[v] = 1;
  return in;
}

// Sparse per-vertex measure over a shared denominator.
using ScaledDist = std::vector<std::pair<Vertex, std::int64_t>>;

}  // namespace

std::vector<Vertex> threshold_set(std::span<const Rational> zeta, const Rational& t, const std::vector<char>* member) {
  std::vector<Vertex> out;
  for (std::size_t x = 0; x < zeta.size(); ++x) {
    if (member != nullptr && !(*member)[x]) continue;
    if (zeta[x] > t) out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

BoundarySets boundary(const BoundedDegreeGraph& g, const std::vector<char>& member, std::span<const Vertex> set) {
  const auto in = as_mask(g.num_vertices(), set);
  BoundarySets out;
  for (Vertex x : set) {
    bool on_boundary = false;
    for (Vertex y : g.neighbors(x)) {
      if (member[y] && !in[y]) {
        on_boundary = true;
        out.edges.push_back(Edge::make(x, y));
      }
    }
    if (on_boundary) out.vertices.push_back(x);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

AreaCoarea area_coarea_check(const BoundedDegreeGraph& f, std::span<const Rational> zeta) {
  if (zeta.size() != static_cast<std::size_t>(f.num_vertices())) throw std::invalid_argument("zeta size mismatch");
  std::set<Rational> breaks{Rational(0), Rational(1)};
  for (const Rational& z : zeta) {
    if (z < Rational(0) || z > Rational(1)) throw OutOfRange("zeta value " + z.str() + " outside [0, 1]");
    breaks.insert(z);
  }
  AreaCoarea out;
  for (const Edge& e : f.edges()) out.coarea_lhs += Rational(2) * (zeta[e.u] - zeta[e.v]).abs();
  for (const Rational& z : zeta) out.area_lhs += z;

  const std::vector<char> all(zeta.size(), 1);
  const std::vector<Rational> points(breaks.begin(), breaks.end());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational width = points[i + 1] - points[i];
    // Omega_t is constant for t in [points[i], points[i+1]).
    const auto omega = threshold_set(zeta, points[i]);
    const auto bd = boundary(f, all, omega);
    out.coarea_rhs += Rational(2) * width * Rational(static_cast<std::int64_t>(bd.edges.size()));
    out.area_rhs += width * Rational(static_cast<std::int64_t>(omega.size()));
  }
  return out;
}

LowBoundarySet find_low_boundary_set(const BoundedDegreeGraph& g, const RelativeWitness& w, const Rational& eps) {
  const Vertex n = g.num_vertices();
  const auto& member = w.member;
  std::vector<Vertex> members;
  std::int64_t common = 1;
  for (Vertex x = 0; x < n; ++x) {
    if (!member[x]) continue;
    members.push_back(x);
    if (w.dists[x].empty()) throw InvalidDistribution("relative witness missing at vertex " + std::to_string(x));
    common = checked_lcm(common, w.dists[x].denominator());
  }
  if (members.empty()) throw EmptySubgraph("no vertex left");

  std::vector<ScaledDist> scaled(static_cast<std::size_t>(n));
  for (Vertex x : members) {
    const auto& f = w.dists[x];
    const std::int64_t factor = common / f.denominator();
    for (const auto& e : f.entries()) scaled[x].emplace_back(e.vertex, checked_mul(e.numerator, factor));
  }

  // Ordered-pair edge variation and total mass per candidate center z.
  std::vector<__int128> variation(static_cast<std::size_t>(n), 0);
  std::vector<__int128> mass(static_cast<std::size_t>(n), 0);
  for (Vertex x : members) {
    for (const auto& [z, v] : scaled[x]) mass[z] += v;
    for (Vertex y : g.neighbors(x)) {
      if (!member[y] || y < x) continue;
      const auto& a = scaled[x];
      const auto& b = scaled[y];
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          variation[a[i].first] += 2 * static_cast<__int128>(a[i].second);
          ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
          variation[b[j].first] += 2 * static_cast<__int128>(b[j].second);
          ++j;
        } else {
          variation[a[i].first] += 2 * abs_wide(static_cast<__int128>(a[i].second) - b[j].second);
          ++i;
          ++j;
        }
      }
    }
  }
  Vertex z0 = -1;
  for (Vertex z : members) {
    if (mass[z] == 0) continue;
    if (z0 < 0 || variation[z] * mass[z0] < variation[z0] * mass[z]) z0 = z;
  }
  if (z0 < 0) throw NoQualifyingSet("relative witness carries no mass");

  std::vector<std::int64_t> zeta(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> positive;
  for (Vertex x : members) {
    const auto& a = scaled[x];
    const auto it = std::lower_bound(a.begin(), a.end(), z0, [](const auto& e, Vertex key) { return e.first < key; });
    if (it != a.end() && it->first == z0) {
      zeta[x] = it->second;
      positive.push_back(x);
    }
  }
  std::vector<std::int64_t> levels{0};
  for (Vertex x : positive) levels.push_back(zeta[x]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  const int d = g.degree_bound();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (std::size_t li = 0; li + 1 < levels.size(); ++li) {
    const std::int64_t t = levels[li];
    std::vector<Vertex> omega;
    for (Vertex x : positive) {
      if (zeta[x] > t) omega.push_back(x);
    }
    for (Vertex x : omega) in[x] = 1;
    std::size_t bd_edges = 0;
    std::size_t bd_vertices = 0;
    for (Vertex x : omega) {
      std::size_t here = 0;
      for (Vertex y : g.neighbors(x)) {
        if (member[y] && !in[y]) ++here;
      }
      bd_edges += here;
      bd_vertices += here > 0 ? 1 : 0;
    }
    for (Vertex x : omega) in[x] = 0;
    // 2 |boundary edges| <= d * eps * |omega|
    const __int128 lhs = static_cast<__int128>(2) * static_cast<__int128>(bd_edges) * eps.den();
    const __int128 rhs = static_cast<__int128>(d) * eps.num() * static_cast<__int128>(omega.size());
    if (lhs <= rhs) {
      std::sort(omega.begin(), omega.end());
      return {std::move(omega), z0, Rational(t, common), bd_vertices, bd_edges};
    }
  }
  throw NoQualifyingSet("no superlevel set around vertex " + std::to_string(z0) + " meets the boundary bound at eps " +
                        eps.str());
}

std::size_t PartitionResult::max_block() const {
  std::size_t best = 0;
  for (const auto& b : blocks) best = std::max(best, b.size());
  return best;
}

std::int64_t PartitionResult::certified_block_bound() const {
  return tree_bound ? std::min(*tree_bound, ball_bound) : ball_bound;
}

Rational PartitionResult::removal_budget(const BoundedDegreeGraph& g) const {
  const std::int64_t d = g.degree_bound();
  return Rational(d * d) * eps / Rational(2) * Rational(static_cast<std::int64_t>(g.num_vertices()));
}

PartitionResult extract_partition(const BoundedDegreeGraph& g, const WitnessFunction& w, const Rational& eps) {
  const Vertex n = g.num_vertices();
  PartitionResult out;
  out.eps = eps;
  out.ball_bound = max_ball_size_actual(g, 2 * w.radius);
  try {
    out.tree_bound = max_ball_size_bound(g.degree_bound(), 2 * w.radius);
  } catch (const std::overflow_error&) {
    out.tree_bound.reset();
  }
  std::vector<char> member(static_cast<std::size_t>(n), 1);
  Vertex remaining = n;
  while (remaining > 0) {
    const RelativeWitness rel = project_witness(g, w, member);
    LowBoundarySet low = find_low_boundary_set(g, rel, eps);
    for (Vertex x : low.vertices) {
      for (Vertex y : g.neighbors(x)) {
        if (member[y] && !std::binary_search(low.vertices.begin(), low.vertices.end(), y)) {
          out.removed.push_back(Edge::make(x, y));
        }
      }
    }
    for (Vertex x : low.vertices) member[x] = 0;
    remaining -= static_cast<Vertex>(low.vertices.size());
    out.info.push_back({low.center, low.threshold, low.boundary_vertices, low.boundary_edges});
    out.blocks.push_back(std::move(low.vertices));
  }
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

HyperfiniteReport check_hyperfinite(const BoundedDegreeGraph& g, const PartitionResult& partition,
                                    const Rational& eps, std::int64_t K, Normalization norm) {
  const Vertex n = g.num_vertices();
  HyperfiniteReport report;
  const auto w = static_cast<std::int64_t>(partition.removed.size());
  report.removed_per_edge = g.num_edges() == 0 ? Rational(0) : Rational(w, static_cast<std::int64_t>(g.num_edges()));
  report.removed_per_vertex = n == 0 ? Rational(0) : Rational(w, n);
  report.max_block = partition.max_block();

  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  bool ok = true;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (Vertex v : partition.blocks[b]) {
      if (!g.contains(v) || block_of[v] >= 0) {
        ok = false;
        continue;
      }
      block_of[v] = static_cast<int>(b);
    }
  }
  ok = ok && std::none_of(block_of.begin(), block_of.end(), [](int b) { return b < 0; });
  if (ok) {
    for (const Edge& e : g.edges()) {
      const bool cut = std::binary_search(partition.removed.begin(), partition.removed.end(), e);
      if (!cut && block_of[e.u] != block_of[e.v]) ok = false;
    }
    for (const Edge& e : partition.removed) {
      if (!g.has_edge(e.u, e.v)) ok = false;
    }
  }
  report.is_partition = ok;
  const Rational& measured = norm == Normalization::per_edge ? report.removed_per_edge : report.removed_per_vertex;
  report.ok = ok && static_cast<std::int64_t>(report.max_block) <= K && measured <= eps;
  return report;
}

EditDistanceBound edit_distance_upper_bound(const BoundedDegreeGraph& g, const PartitionResult& partition,
                                            Predicate predicate) {
  EditDistanceBound out;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (!evaluate(predicate, induced_subgraph(g, partition.blocks[b]))) {
      out.offending = b;
      return out;
    }
  }
  out.feasible = true;
  out.bound = g.num_vertices() == 0
                  ? Rational(0)
                  : Rational(static_cast<std::int64_t>(partition.removed.size()), g.num_vertices());
  return out;
}

}  // namespace apls
