#include "apls/verifier.hpp"

#include <stdexcept>
#include <string>

#include "apls/errors.hpp"

namespace apls {

std::string_view to_string(Check c) {
  switch (c) {
    case Check::properness:
      return "properness";
    case Check::probability:
      return "probability";
    case Check::l1:
      return "l1";
    case Check::local_property:
      return "localP";
    case Check::custom:
      return "custom";
  }
  return "?";
}

std::optional<Vertex> Verdict::first_rejecting() const {
  for (std::size_t v = 0; v < decisions.size(); ++v) {
    if (decisions[v]) return static_cast<Vertex>(v);
  }
  return std::nullopt;
}

std::size_t Verdict::num_rejecting() const {
  return static_cast<std::size_t>(
      std::count_if(decisions.begin(), decisions.end(), [](const auto& d) { return d.has_value(); }));
}

std::optional<Check> PropertyAVerifier::check(const LabeledBall<Label>& ball) const {
  const std::size_t size = ball.size();
  for (std::size_t i = 0; i < size; ++i) {
    const auto& l = ball.label(static_cast<int>(i));
    if (l.color < 0 || l.color >= palette_ || l.table.size() != static_cast<std::size_t>(palette_)) {
      return Check::properness;
    }
  }

  // Properness: BFS inside N from every vertex up to depth r.
  std::vector<int> seen(size, -1);
  std::vector<int> dist(size, 0);
  std::vector<int> queue;
  queue.reserve(size);
  for (std::size_t y = 0; y < size; ++y) {
    const int cy = ball.label(static_cast<int>(y)).color;
    queue.clear();
    queue.push_back(static_cast<int>(y));
    seen[y] = static_cast<int>(y);
    dist[y] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (dist[u] == r_) continue;
      for (int w : ball.adjacency[u]) {
        if (seen[w] == static_cast<int>(y)) continue;
        seen[w] = static_cast<int>(y);
        dist[w] = dist[u] + 1;
        if (ball.label(w).color == cy) return Check::properness;
        queue.push_back(w);
      }
    }
  }

  // Probability: sum over B_r(x, N).
  const int cx = ball.label(0).color;
  std::int64_t mass = 0;
  for (std::size_t z = 0; z < size; ++z) {
    if (ball.depth[z] <= r_) mass = checked_add(mass, ball.label(static_cast<int>(z)).table[cx]);
  }
  if (mass != alpha_) return Check::probability;

  // l1 against every neighbour over N, each side read through the decoding
  // (entries beyond distance r of their vertex count as 0).
  const __int128 bound = static_cast<__int128>(eps_prime_.num()) * alpha_;
  std::vector<int> near_y(size, -1);
  for (int y : ball.adjacency[0]) {
    const int cy = ball.label(y).color;
    queue.clear();
    queue.push_back(y);
    near_y[y] = y;
    dist[y] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      if (dist[u] == r_) continue;
      for (int w : ball.adjacency[u]) {
        if (near_y[w] == y) continue;
        near_y[w] = y;
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
    __int128 total = 0;
    for (std::size_t z = 0; z < size; ++z) {
      const auto& t = ball.label(static_cast<int>(z)).table;
      const std::int64_t a = ball.depth[z] <= r_ ? t[cx] : 0;
      const std::int64_t b = near_y[z] == y ? t[cy] : 0;
      total += a < b ? b - a : a - b;
    }
    if (total * eps_prime_.den() > bound) return Check::l1;
  }
  return std::nullopt;
}

std::optional<Check> LocallyPVerifier::check(const LabeledBall<Label>& ball) const {
  if (predicate_ == Predicate::always_true) return std::nullopt;
  return evaluate(predicate_, ball_structure(ball)) ? std::nullopt : std::optional<Check>(Check::local_property);
}

std::vector<PropertyALabel> property_a_labels(const BoundedDegreeGraph& g, const ProofLabeling& labeling) {
  labeling.validate();
  if (labeling.num_vertices() != g.num_vertices()) {
    throw MalformedLabeling("labeling has " + std::to_string(labeling.num_vertices()) + " vertices, graph has " +
                            std::to_string(g.num_vertices()));
  }
  std::vector<PropertyALabel> labels;
  labels.reserve(labeling.colors.size());
  for (Vertex v = 0; v < labeling.num_vertices(); ++v) labels.push_back({labeling.colors[v], labeling.table(v)});
  return labels;
}

PropertyAVerifier property_a_verifier(const ProofLabeling& labeling) {
  const auto& p = labeling.params;
  if (!(p.eps_prime > Rational(0))) throw MalformedLabeling("eps' must be positive");
  return PropertyAVerifier(p.r, p.alpha, p.eps_prime, p.palette);
}

Verdict verify_property_a(const BoundedDegreeGraph& g, const ProofLabeling& labeling, int jobs) {
  const auto labels = property_a_labels(g, labeling);
  return run_verifier(g, std::span<const PropertyALabel>(labels), property_a_verifier(labeling), jobs);
}

WitnessFunction decode_accepted_witness(const BoundedDegreeGraph& g, const ProofLabeling& labeling, int jobs) {
  const Verdict verdict = verify_property_a(g, labeling, jobs);
  if (!verdict.accepted()) {
    throw NotAccepted("labeling rejected at vertex " + std::to_string(*verdict.first_rejecting()));
  }
  const int r = labeling.params.r;
  WitnessFunction w;
  w.radius = r;
  w.dists.reserve(static_cast<std::size_t>(g.num_vertices()));
  BallExtractor ex(g);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    std::vector<RationalDist::Entry> entries;
    for (Vertex z : ex.reach(x, r)) entries.push_back({z, labeling.table(z)[labeling.colors[x]]});
    w.dists.push_back(RationalDist::from_entries(labeling.params.alpha, std::move(entries)));
  }
  return w;
}

Verdict verify_locally_p(const BoundedDegreeGraph& g, int K, Predicate predicate, int jobs) {
  if (K < 0) throw std::invalid_argument("negative locality radius");
  const Vertex n = g.num_vertices();
  Verdict verdict;
  verdict.decisions.resize(static_cast<std::size_t>(n));
  if (predicate == Predicate::always_true) return verdict;

  const auto comps = components(g);
  std::vector<std::size_t> comp_of(static_cast<std::size_t>(n));
  std::vector<char> comp_ok(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = c;
    comp_ok[c] = evaluate(predicate, induced_subgraph(g, comps[c])) ? 1 : 0;
  }
  const LocallyPVerifier verifier(K, predicate);
  const std::vector<std::monostate> labels(static_cast<std::size_t>(n));
  parallel_chunks(n, jobs, [&](Vertex begin, Vertex end) {
    BallExtractor ex(g);
    for (Vertex x = begin; x < end; ++x) {
      const std::size_t c = comp_of[x];
      if (ex.reach(x, K).size() == comps[c].size()) {
        if (!comp_ok[c]) verdict.decisions[x] = Check::local_property;
        continue;
      }
      const RootedBall b = ex.ball(x, K);
      verdict.decisions[x] = verifier.check(make_labeled_ball<std::monostate>(b, labels));
    }
  });
  return verdict;
}

Verdict pipeline_verify(const BoundedDegreeGraph& g, const ProofLabeling& labeling, int K, Predicate predicate,
                        int jobs) {
  if (K < 0) throw MalformedLabeling("negative locality radius");
  Verdict verdict = verify_property_a(g, labeling, jobs);
  const Verdict local = verify_locally_p(g, K, predicate, jobs);
  // The product reports the first component's failure before the second's.
  for (std::size_t x = 0; x < verdict.decisions.size(); ++x) {
    if (!verdict.decisions[x]) verdict.decisions[x] = local.decisions[x];
  }
  return verdict;
}

std::int64_t default_locality(const BoundedDegreeGraph& g, int r) {
  std::int64_t actual = max_ball_size_actual(g, 2 * r);
  try {
    return std::min(actual, max_ball_size_bound(g.degree_bound(), 2 * r));
  } catch (const std::overflow_error&) {
    return actual;
  }
}

}  // namespace apls
