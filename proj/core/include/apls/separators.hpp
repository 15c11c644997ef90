#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "apls/graph.hpp"
#include "apls/measures.hpp"
#include "apls/rational.hpp"

namespace apls {

/// Vertex set Y (sorted) whose removal leaves components of size <= K.
struct SeparatorSample {
  std::vector<Vertex> removed;
  std::int64_t K = 0;
};

struct WeightedSeparator {
  SeparatorSample sample;
  Rational weight;
};

/// Finitely supported probability measure on K-separators of one graph.
class SeparatorDistribution {
 public:
  SeparatorDistribution() = default;

  /// Sorts each sample, merges identical samples, and validates: weights
  /// positive and summing to one, every sample a K-separator of g.
  /// Throws InvalidDistribution.
  static SeparatorDistribution build(const BoundedDegreeGraph& g, std::int64_t K,
                                     std::vector<std::pair<std::vector<Vertex>, Rational>> samples);

  std::int64_t K() const { return K_; }
  Vertex num_vertices() const { return n_; }
  const std::vector<WeightedSeparator>& support() const { return support_; }

 private:
  std::int64_t K_ = 0;
  Vertex n_ = 0;
  std::vector<WeightedSeparator> support_;
};

bool is_k_separator(const BoundedDegreeGraph& g, std::span<const Vertex> removed, std::int64_t K);

/// Size of the largest component of G - Y.
std::int64_t largest_component_without(const BoundedDegreeGraph& g, std::span<const Vertex> removed);

struct Marginal {
  Rational value;
  Vertex vertex = -1;  // argmax, smallest id on ties; -1 for an empty graph
};

/// max over x of mu(Y : x in Y).
Marginal max_marginal(const SeparatorDistribution& dist);
/// mu(Y : x in Y) for every x.
std::vector<Rational> marginals(const SeparatorDistribution& dist);

/// Uniform over Y_s = {v : v = s mod k}, s = 0..k-1, with vertex ids taken as
/// positions along the path or cycle. K is the largest residual component
/// (k - 1 for paths and for cycles whose length k divides).
SeparatorDistribution path_shift_distribution(const BoundedDegreeGraph& g, int k);

/// Uniform over the k^2 separators {(i, j) : i = s1 or j = s2 mod k} of a
/// rows x cols grid; K = (k - 1)^2.
SeparatorDistribution grid_shift_distribution(const BoundedDegreeGraph& g, int rows, int cols, int k);

/// Uniform over Y_s = {v : depth(v) = s mod k} for the tree rooted at vertex
/// 0; K = max_ball_size_bound(d, k - 1).
SeparatorDistribution tree_depth_shift_distribution(const BoundedDegreeGraph& g, int k);

/// f_{Y,x}: weight * delta_x if x in Y, else weight spread uniformly on the
/// component of G - Y containing x.
std::vector<std::pair<Vertex, Rational>> separator_contribution(const BoundedDegreeGraph& g,
                                                                const SeparatorSample& sample,
                                                                const Rational& weight, Vertex x);

/// f~(x) = sum over samples of f_{Y,x}, over the common denominator
/// lcm_Y(den(mu(Y)) * lcm of component sizes of G - Y). Radius is K.
/// Throws InvalidDistribution if dist does not belong to g.
WitnessFunction witness_from_separators(const BoundedDegreeGraph& g, const SeparatorDistribution& dist);

/// Best-effort multiplicative-weights search: each round greedily removes the
/// lightest vertex of every oversized component until a K-separator remains,
/// prunes redundant vertices, then boosts the weights of the chosen vertices.
/// The result is uniform over the rounds.
SeparatorDistribution minimax_separator_search(const BoundedDegreeGraph& g, std::int64_t K, int rounds,
                                               std::uint64_t seed);

}  // namespace apls
