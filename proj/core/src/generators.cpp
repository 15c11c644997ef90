#include "apls/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "apls/errors.hpp"

namespace apls {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Unbiased value in [0, bound) from a 64-bit engine. std::uniform_int_distribution
// is implementation-defined; this keeps generated files identical everywhere.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

BoundedDegreeGraph make_grid(const GridSpec& s) {
  if (s.rows < 1 || s.cols < 1) throw InfeasibleSpec("grid dimensions must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < s.rows; ++i) {
    for (int j = 0; j < s.cols; ++j) {
      const Vertex v = i * s.cols + j;
      if (j + 1 < s.cols) edges.push_back({v, v + 1});
      if (i + 1 < s.rows) edges.push_back({v, v + s.cols});
    }
  }
  return BoundedDegreeGraph::build(s.rows * s.cols, 4, edges);
}

BoundedDegreeGraph make_path(int n) {
  if (n < 1) throw InfeasibleSpec("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return BoundedDegreeGraph::build(n, 2, edges);
}

BoundedDegreeGraph make_cycle(int n) {
  if (n < 3) throw InfeasibleSpec("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return BoundedDegreeGraph::build(n, 2, edges);
}

BoundedDegreeGraph make_tree(const FullTreeSpec& s) {
  if (s.branching < 1 || s.depth < 0) throw InfeasibleSpec("tree needs branching >= 1 and depth >= 0");
  std::int64_t n = 0;
  std::int64_t level = 1;
  for (int i = 0; i <= s.depth; ++i) {
    n += level;
    level *= s.branching;
    if (n > (1 << 26)) throw InfeasibleSpec("tree too large");
  }
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>((v - 1) / s.branching), v});
  return BoundedDegreeGraph::build(static_cast<Vertex>(n), s.branching + 1, edges);
}

BoundedDegreeGraph make_random_regular(const RandomRegularSpec& s) {
  if (s.n < 1 || s.degree < 2 || s.degree >= s.n) throw InfeasibleSpec("random_regular needs 2 <= d < n");
  if ((static_cast<std::int64_t>(s.n) * s.degree) % 2 != 0) throw InfeasibleSpec("random_regular needs n*d even");
  std::mt19937_64 rng(s.seed);
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(s.n) * s.degree);
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    points.clear();
    for (Vertex v = 0; v < s.n; ++v) {
      for (int k = 0; k < s.degree; ++k) points.push_back(v);
    }
    for (std::size_t i = points.size() - 1; i > 0; --i) {
      std::swap(points[i], points[bounded(rng, i + 1)]);
    }
    std::set<Edge> seen;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      if (points[i] == points[i + 1] || !seen.insert(Edge::make(points[i], points[i + 1])).second) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<Edge> edges(seen.begin(), seen.end());
      return BoundedDegreeGraph::build(s.n, s.degree, edges);
    }
  }
  throw InfeasibleSpec("pairing model failed to produce a simple graph");
}

}  // namespace

int declared_degree(const FamilySpec& spec) {
  return std::visit(overloaded{[](const GridSpec&) { return 4; }, [](const PathSpec&) { return 2; },
                               [](const CycleSpec&) { return 2; },
                               [](const FullTreeSpec& s) { return std::max(2, s.branching + 1); },
                               [](const RandomRegularSpec& s) { return s.degree; }},
                    spec);
}

BoundedDegreeGraph generate(const FamilySpec& spec) {
  return std::visit(overloaded{[](const GridSpec& s) { return make_grid(s); },
                               [](const PathSpec& s) { return make_path(s.n); },
                               [](const CycleSpec& s) { return make_cycle(s.n); },
                               [](const FullTreeSpec& s) { return make_tree(s); },
                               [](const RandomRegularSpec& s) { return make_random_regular(s); }},
                    spec);
}

std::optional<FamilySpec> recognize_family(const BoundedDegreeGraph& g) {
  const Vertex n = g.num_vertices();
  if (n == 0) return std::nullopt;
  std::vector<FamilySpec> candidates;
  candidates.push_back(PathSpec{n});
  if (n >= 3) candidates.push_back(CycleSpec{n});
  // Grid: vertex 0 is adjacent to 1 and to `cols`.
  for (Vertex w : g.neighbors(0)) {
    if (w > 1 && n % w == 0) candidates.push_back(GridSpec{n / w, w});
  }
  if (n == 1) candidates.push_back(GridSpec{1, 1});
  if (g.degree(0) >= 1) {
    const int b = g.degree(0);
    std::int64_t total = 1;
    std::int64_t level = 1;
    for (int depth = 1; total < n; ++depth) {
      level *= b;
      total += level;
      if (total == n) candidates.push_back(FullTreeSpec{b, depth});
    }
  }
  for (const auto& c : candidates) {
    BoundedDegreeGraph h;
    try {
      h = generate(c);
    } catch (const InfeasibleSpec&) {
      continue;
    }
    if (h.num_vertices() == n && h.edges() == g.edges()) return c;
  }
  return std::nullopt;
}

std::string describe(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const GridSpec& s) { return "grid(" + std::to_string(s.rows) + "," + std::to_string(s.cols) + ")"; },
          [](const PathSpec& s) { return "path(" + std::to_string(s.n) + ")"; },
          [](const CycleSpec& s) { return "cycle(" + std::to_string(s.n) + ")"; },
          [](const FullTreeSpec& s) {
            return "full_tree(" + std::to_string(s.branching) + "," + std::to_string(s.depth) + ")";
          },
          [](const RandomRegularSpec& s) {
            return "random_regular(" + std::to_string(s.n) + "," + std::to_string(s.degree) + "," +
                   std::to_string(s.seed) + ")";
          }},
      spec);
}

}  // namespace apls
