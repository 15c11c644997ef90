#include "apls/labeling.hpp"

#include <algorithm>
#include <string>

#include "apls/errors.hpp"

namespace apls {

void ProofLabeling::validate() const {
  const auto& p = params;
  if (p.alpha < 1) throw MalformedLabeling("alpha must be positive");
  if (p.palette < 1) throw MalformedLabeling("palette must be positive");
  if (p.r < 0) throw MalformedLabeling("negative horizon");
  if (tables.size() != colors.size() * static_cast<std::size_t>(p.palette)) {
    throw MalformedLabeling("table storage does not match palette");
  }
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 0 || colors[v] >= p.palette) {
      throw MalformedLabeling("color of vertex " + std::to_string(v) + " outside the palette");
    }
  }
  for (std::int64_t t : tables) {
    if (t < 0 || t > p.alpha) throw MalformedLabeling("table entry outside [0, alpha]");
  }
}

std::vector<int> distance_coloring(const BoundedDegreeGraph& g, int q) {
  if (q < 0) throw std::invalid_argument("negative coloring distance");
  const Vertex n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> used_stamp;  // used_stamp[c] == v + 1 if color c is taken near v
  BallExtractor ex(g);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : ex.reach(v, q)) {
      const int c = color[w];
      if (c < 0) continue;
      if (static_cast<std::size_t>(c) >= used_stamp.size()) used_stamp.resize(static_cast<std::size_t>(c) + 1, 0);
      used_stamp[c] = v + 1;
    }
    int c = 0;
    while (static_cast<std::size_t>(c) < used_stamp.size() && used_stamp[c] == v + 1) ++c;
    color[v] = c;
  }
  return color;
}

int palette_size(std::span<const int> colors) {
  int best = 0;
  for (int c : colors) best = std::max(best, c + 1);
  return std::max(best, 1);
}

ProofLabeling build_proof(const BoundedDegreeGraph& g, const WitnessFunction& quantized, std::span<const int> colors,
                          SchemeParams params) {
  const Vertex n = g.num_vertices();
  if (colors.size() != static_cast<std::size_t>(n) || quantized.dists.size() != colors.size()) {
    throw std::invalid_argument("colors/witness do not match the graph");
  }
  params.r = quantized.radius;
  params.palette = std::max(params.palette, palette_size(colors));
  ProofLabeling out;
  out.params = params;
  out.colors.assign(colors.begin(), colors.end());
  out.tables.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(params.palette), 0);

  // owner[q] is the last z whose ball claimed color q.
  std::vector<int> owner(static_cast<std::size_t>(params.palette), -1);
  std::vector<std::int64_t> encoded_mass(static_cast<std::size_t>(n), 0);
  BallExtractor ex(g);
  for (Vertex z = 0; z < n; ++z) {
    auto row = out.table(z);
    const auto& around = ex.reach(z, params.r);
    for (Vertex x : around) {
      const int q = colors[x];
      if (owner[q] == z) throw AmbiguousColor("two vertices of color " + std::to_string(q) + " near " + std::to_string(z));
      owner[q] = z;
      const RationalDist& f = quantized.dists[x];
      if (params.alpha % f.denominator() != 0) {
        throw InvalidDistribution("witness denominator does not divide alpha");
      }
      const std::int64_t value = checked_mul(f.numerator_at(z), params.alpha / f.denominator());
      row[q] = value;
      encoded_mass[x] += value;
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (encoded_mass[x] != params.alpha) {
      throw InvalidDistribution("witness of vertex " + std::to_string(x) + " has mass outside its radius-" +
                                std::to_string(params.r) + " ball");
    }
  }
  return out;
}

Rational decode_value(const BoundedDegreeGraph& g, const ProofLabeling& labeling, Vertex x, Vertex z) {
  const auto dist = bfs_distances(g, x, labeling.params.r);
  if (dist[z] < 0) return Rational(0);
  return Rational(labeling.table(z)[labeling.colors[x]], labeling.params.alpha);
}

}  // namespace apls
