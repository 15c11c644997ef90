#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apls/graph.hpp"
#include "apls/rational.hpp"

namespace apls {

/// Probability measure on vertices with exact rational values: every value
/// is numerator / denominator and the numerators sum to the denominator.
/// Entries are sparse, sorted by vertex, and never zero.
class RationalDist {
 public:
  struct Entry {
    Vertex vertex = 0;
    std::int64_t numerator = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Empty placeholder (not a probability measure); used for "absent" slots.
  RationalDist() = default;

  static RationalDist point(Vertex v);
  static RationalDist uniform(std::span<const Vertex> support);
  /// Merges duplicate vertices and drops zeros. Throws InvalidDistribution if
  /// any numerator is negative or they do not sum to `denominator`.
  static RationalDist from_entries(std::int64_t denominator, std::vector<Entry> entries);

  std::int64_t denominator() const { return denominator_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::int64_t numerator_at(Vertex v) const;
  Rational at(Vertex v) const { return Rational(numerator_at(v), denominator_); }

  /// Same measure expressed over a denominator that is a multiple of the
  /// current one. Throws std::invalid_argument otherwise.
  RationalDist rescaled(std::int64_t denominator) const;

  friend bool operator==(const RationalDist& a, const RationalDist& b);

 private:
  std::int64_t denominator_ = 1;
  std::vector<Entry> entries_;
};

/// sum_z |p(z) - q(z)|, exact.
Rational l1_distance(const RationalDist& p, const RationalDist& q);

/// Per-vertex measures f~(x) with support meant to lie in B_radius(x, G).
struct WitnessFunction {
  int radius = 0;
  std::vector<RationalDist> dists;
};

struct UniformityReport {
  Rational max_edge_l1;
  std::optional<Edge> worst_edge;
  bool support_ok = true;
  bool sums_ok = true;
  std::optional<Vertex> first_support_violation;
  std::vector<std::pair<Edge, Rational>> per_edge;

  /// Uniform at level eps under the non-strict convention (max_edge_l1 <= eps).
  bool uniform_at(const Rational& eps) const { return support_ok && sums_ok && max_edge_l1 <= eps; }
};

/// f~(x) = uniform distribution on B_r(x, G).
WitnessFunction uniform_ball_witness(const BoundedDegreeGraph& g, int r);

/// Exact max edge l1 and support check. `keep_table` fills per_edge.
UniformityReport check_uniformity(const BoundedDegreeGraph& g, const WitnessFunction& w,
                                  bool keep_table = false);

/// max over x of max d_G(x, z) for z in Supp(f~(x)).
int support_radius(const BoundedDegreeGraph& g, const WitnessFunction& w);

/// Rounds f to a measure with all values in {0, 1/alpha, ..., 1}: floor every
/// value, then raise the alpha - k entries with the largest fractional parts
/// (ties by vertex id). l1 error is below |Supp f| / alpha.
RationalDist discretize(const RationalDist& f, std::int64_t alpha);

/// Smallest alpha with 3 * max_ball <= alpha * (eps_prime - eps).
std::int64_t required_alpha(std::int64_t max_ball, const Rational& eps, const Rational& eps_prime);

/// Discretizes every f~(x) at alpha. Throws NotUniform if w is not
/// (eps, r)-uniform and InfeasibleAlpha if alpha is below
/// required_alpha(max_ball_size_actual(G, r), eps, eps_prime).
WitnessFunction discretize_witness(const BoundedDegreeGraph& g, const WitnessFunction& w, const Rational& eps,
                                   const Rational& eps_prime, std::int64_t alpha);

/// Witness on an induced subgraph F (given by membership mask), radius 2r,
/// relative to G. dists[x] is empty for x outside F.
struct RelativeWitness {
  int radius = 0;
  std::vector<char> member;
  std::vector<RationalDist> dists;
};

/// Nearest vertex of F under d_G for every vertex of G, ties by smallest id.
/// Vertices in components of G that miss F map to -1.
std::vector<Vertex> nearest_in_subgraph(const BoundedDegreeGraph& g, const std::vector<char>& member);

/// Pushes each g~(x) forward along the nearest-point map into F.
/// Throws EmptySubgraph when F has no vertex.
RelativeWitness project_witness(const BoundedDegreeGraph& g, const WitnessFunction& w,
                                const std::vector<char>& member);

}  // namespace apls
