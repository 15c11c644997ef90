#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apls/graph.hpp"
#include "apls/measures.hpp"
#include "apls/rational.hpp"

namespace apls {

struct SchemeParams {
  int d = 2;
  int r = 1;
  std::optional<Rational> eps;  // measured by the prover; not serialized
  Rational eps_prime;
  std::int64_t alpha = 1;
  int palette = 1;
  std::optional<std::int64_t> K;  // locality horizon for the locally-P half
};

/// Per-vertex pair (color, table). The table of z has `palette` entries;
/// entry q is the numerator (over alpha) of the mass the vertex colored q near
/// z puts on z.
struct ProofLabeling {
  SchemeParams params;
  std::vector<int> colors;
  std::vector<std::int64_t> tables;  // row-major, num_vertices x palette

  Vertex num_vertices() const { return static_cast<Vertex>(colors.size()); }
  std::span<const std::int64_t> table(Vertex z) const {
    const auto p = static_cast<std::size_t>(params.palette);
    return {tables.data() + static_cast<std::size_t>(z) * p, p};
  }
  std::span<std::int64_t> table(Vertex z) {
    const auto p = static_cast<std::size_t>(params.palette);
    return {tables.data() + static_cast<std::size_t>(z) * p, p};
  }

  /// Structural well-formedness: colors in range, tables of length palette,
  /// entries in [0, alpha]. Throws MalformedLabeling.
  void validate() const;
};

/// Greedy coloring of the power graph (x ~ y iff 0 < d_G(x, y) <= q),
/// vertices in id order, smallest free color.
std::vector<int> distance_coloring(const BoundedDegreeGraph& g, int q);

int palette_size(std::span<const int> colors);

/// Honest encoding of a quantized witness. `colors` must be proper at
/// distance 2r at least; params.alpha must be a multiple of every witness
/// denominator; the palette is taken from the colors when params.palette is
/// smaller. Throws AmbiguousColor if two vertices of some B_r(z) share a color
/// and InvalidDistribution if some mass lies outside B_r.
ProofLabeling build_proof(const BoundedDegreeGraph& g, const WitnessFunction& quantized, std::span<const int> colors,
                          SchemeParams params);

/// T2(z)(T1(x)) / alpha when d_G(x, z) <= r, else 0.
Rational decode_value(const BoundedDegreeGraph& g, const ProofLabeling& labeling, Vertex x, Vertex z);

}  // namespace apls
