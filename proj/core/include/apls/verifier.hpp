#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "apls/graph.hpp"
#include "apls/labeling.hpp"
#include "apls/measures.hpp"
#include "apls/planarity.hpp"
#include "apls/rational.hpp"

namespace apls {

enum class Check { properness, probability, l1, local_property, custom };

std::string_view to_string(Check c);

/// Per-vertex decisions; nullopt means accept.
struct Verdict {
  std::vector<std::optional<Check>> decisions;

  bool accepted() const {
    return std::all_of(decisions.begin(), decisions.end(), [](const auto& d) { return !d.has_value(); });
  }
  std::optional<Vertex> first_rejecting() const;
  std::size_t num_rejecting() const;
};

/// What a vertex sees: its labeled neighbourhood with anonymous local ids.
/// Local vertex 0 is the center; `depth` is the distance from the center.
/// Parent-graph ids are deliberately absent.
template <class Label>
struct LabeledBall {
  int radius_bound = 0;
  std::vector<int> depth;
  std::vector<std::vector<int>> adjacency;
  std::vector<const Label*> labels;

  std::size_t size() const { return depth.size(); }
  const Label& label(int local) const { return *labels[static_cast<std::size_t>(local)]; }
};

template <class Label>
LabeledBall<Label> make_labeled_ball(const RootedBall& b, std::span<const Label> labels) {
  LabeledBall<Label> out;
  out.radius_bound = b.radius_bound;
  out.depth = b.distance;
  out.adjacency = b.adjacency;
  out.labels.reserve(b.size());
  for (Vertex v : b.vertices) out.labels.push_back(&labels[static_cast<std::size_t>(v)]);
  return out;
}

/// The sub-ball of radius `radius` around the center with labels mapped
/// through `project` (which returns a pointer into the original label).
template <class To, class From, class Projection>
LabeledBall<To> restrict_ball(const LabeledBall<From>& ball, int radius, Projection project) {
  LabeledBall<To> out;
  out.radius_bound = radius;
  std::vector<int> local(ball.size(), -1);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball.depth[i] > radius) continue;
    local[i] = static_cast<int>(out.depth.size());
    out.depth.push_back(ball.depth[i]);
    out.labels.push_back(project(ball.labels[i]));
  }
  out.adjacency.resize(out.depth.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (local[i] < 0) continue;
    for (int j : ball.adjacency[i]) {
      if (local[static_cast<std::size_t>(j)] >= 0) out.adjacency[local[i]].push_back(local[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

/// A local verifier exposes its label type, its horizon, and a decision on a
/// labeled ball of that horizon.
template <class V>
concept LocalVerifier = requires(const V& v, const LabeledBall<typename V::Label>& ball) {
  { v.horizon() } -> std::convertible_to<int>;
  { v.check(ball) } -> std::same_as<std::optional<Check>>;
};

/// Calls work(begin, end) on contiguous chunks of [0, n), on `jobs` threads.
template <class Work>
void parallel_chunks(Vertex n, int jobs, Work work) {
  jobs = std::max(1, std::min<int>(jobs, std::max<Vertex>(n, 1)));
  if (jobs == 1) {
    work(Vertex{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const Vertex chunk = (n + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    const Vertex begin = std::min<Vertex>(n, t * chunk);
    const Vertex end = std::min<Vertex>(n, begin + chunk);
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
}

/// Runs a local verifier at every vertex, optionally on `jobs` threads. The
/// result does not depend on `jobs`.
template <LocalVerifier V>
Verdict run_verifier(const BoundedDegreeGraph& g, std::span<const typename V::Label> labels, const V& verifier,
                     int jobs = 1) {
  using Label = typename V::Label;
  Verdict verdict;
  verdict.decisions.resize(static_cast<std::size_t>(g.num_vertices()));
  parallel_chunks(g.num_vertices(), jobs, [&](Vertex begin, Vertex end) {
    BallExtractor ex(g);
    for (Vertex x = begin; x < end; ++x) {
      const RootedBall b = ex.ball(x, verifier.horizon());
      verdict.decisions[x] = verifier.check(make_labeled_ball<Label>(b, labels));
    }
  });
  return verdict;
}

/// Verifier over pairs of labels: accepts iff both components accept on the
/// coordinate projections of the ball truncated to their own horizons.
/// Horizon is the larger of the two.
template <LocalVerifier V1, LocalVerifier V2>
class ProductVerifier {
 public:
  using Label = std::pair<typename V1::Label, typename V2::Label>;

  ProductVerifier(V1 first, V2 second) : first_(std::move(first)), second_(std::move(second)) {}

  int horizon() const { return std::max(first_.horizon(), second_.horizon()); }

  std::optional<Check> check(const LabeledBall<Label>& ball) const {
    using L1 = typename V1::Label;
    using L2 = typename V2::Label;
    const auto left = restrict_ball<L1>(ball, first_.horizon(), [](const Label* l) { return &l->first; });
    if (auto failure = first_.check(left)) return failure;
    const auto right = restrict_ball<L2>(ball, second_.horizon(), [](const Label* l) { return &l->second; });
    return second_.check(right);
  }

  const V1& first() const { return first_; }
  const V2& second() const { return second_; }

 private:
  V1 first_;
  V2 second_;
};

template <LocalVerifier V1, LocalVerifier V2>
ProductVerifier<V1, V2> product_verify(V1 first, V2 second) {
  return ProductVerifier<V1, V2>(std::move(first), std::move(second));
}

/// Accepts everything; identity element of the product.
template <class L>
struct TrivialVerifier {
  using Label = L;
  int radius = 0;
  int horizon() const { return radius; }
  std::optional<Check> check(const LabeledBall<Label>&) const { return std::nullopt; }
};

/// Label of the Property-A scheme: color and a view of the vertex's table.
struct PropertyALabel {
  int color = 0;
  std::span<const std::int64_t> table;
};

/// Three checks on the labeled (r+1)-ball N around x: colors differ for every
/// pair at d_N <= r; sum over B_r(x, N) of T2(z)(C1(x)) equals alpha; for
/// every neighbour y, sum over z in N of |a(z) - b(z)| <= eps' alpha, where
/// a(z) = T2(z)(C1(x)) for z in B_r(x, N) and b(z) = T2(z)(C1(y)) for z in
/// B_r(y, N), both 0 elsewhere. The last sum is exactly alpha times the l1
/// distance of the decoded measures at x and y, so acceptance implies the
/// decoded witness is (eps', r)-uniform.
class PropertyAVerifier {
 public:
  using Label = PropertyALabel;

  PropertyAVerifier(int r, std::int64_t alpha, Rational eps_prime, int palette)
      : r_(r), alpha_(alpha), eps_prime_(eps_prime), palette_(palette) {}

  int horizon() const { return r_ + 1; }
  int r() const { return r_; }
  std::int64_t alpha() const { return alpha_; }
  const Rational& eps_prime() const { return eps_prime_; }
  int palette() const { return palette_; }

  std::optional<Check> check(const LabeledBall<Label>& ball) const;

 private:
  int r_;
  std::int64_t alpha_;
  Rational eps_prime_;
  int palette_;
};

/// Label-free verifier: accepts iff the predicate holds on B_K(x, G).
class LocallyPVerifier {
 public:
  using Label = std::monostate;

  LocallyPVerifier(int K, Predicate predicate) : K_(K), predicate_(predicate) {}

  int horizon() const { return K_; }
  Predicate predicate() const { return predicate_; }
  std::optional<Check> check(const LabeledBall<Label>& ball) const;

 private:
  int K_;
  Predicate predicate_;
};

/// Graph of a labeled ball on its local ids.
template <class Label>
BoundedDegreeGraph ball_structure(const LabeledBall<Label>& ball) {
  std::vector<Edge> edges;
  int maxdeg = 2;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    maxdeg = std::max(maxdeg, static_cast<int>(ball.adjacency[i].size()));
    for (int j : ball.adjacency[i]) {
      if (j > static_cast<int>(i)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return BoundedDegreeGraph::build(static_cast<Vertex>(ball.size()), maxdeg, edges);
}

/// Label views into a labeling. Throws MalformedLabeling when the labeling is
/// structurally broken or sized for another graph.
std::vector<PropertyALabel> property_a_labels(const BoundedDegreeGraph& g, const ProofLabeling& labeling);

PropertyAVerifier property_a_verifier(const ProofLabeling& labeling);

Verdict verify_property_a(const BoundedDegreeGraph& g, const ProofLabeling& labeling, int jobs = 1);

/// f~(x)(z) = T2(z)(T1(x)) / alpha on B_r(x, G). Throws NotAccepted unless
/// the Property-A verifier accepts.
WitnessFunction decode_accepted_witness(const BoundedDegreeGraph& g, const ProofLabeling& labeling, int jobs = 1);

/// Same decisions as run_verifier with LocallyPVerifier(K, predicate). A ball
/// that already spans its whole component is isomorphic to that component,
/// so the predicate is evaluated once per such component.
Verdict verify_locally_p(const BoundedDegreeGraph& g, int K, Predicate predicate, int jobs = 1);

/// Product of the Property-A verifier (parameters from the labeling) and the
/// locally-P verifier with horizon K; decisions equal those of run_verifier
/// on product_verify of the two.
Verdict pipeline_verify(const BoundedDegreeGraph& g, const ProofLabeling& labeling, int K, Predicate predicate,
                        int jobs = 1);

/// Prover-side default for the locally-P horizon: the smaller of N^d_{2r}
/// (when representable) and max |B_{2r}(x, G)|.
std::int64_t default_locality(const BoundedDegreeGraph& g, int r);

}  // namespace apls
