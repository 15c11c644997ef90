#include "apls/measures.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "apls/errors.hpp"

namespace apls {

RationalDist RationalDist::point(Vertex v) {
  RationalDist d;
  d.denominator_ = 1;
  d.entries_.push_back({v, 1});
  return d;
}

RationalDist RationalDist::uniform(std::span<const Vertex> support) {
  if (support.empty()) throw InvalidDistribution("uniform distribution on an empty set");
  std::vector<Entry> entries;
  entries.reserve(support.size());
  for (Vertex v : support) entries.push_back({v, 1});
  return from_entries(static_cast<std::int64_t>(support.size()), std::move(entries));
}

RationalDist RationalDist::from_entries(std::int64_t denominator, std::vector<Entry> entries) {
  if (denominator <= 0) throw InvalidDistribution("non-positive denominator");
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.vertex < b.vertex; });
  RationalDist d;
  d.denominator_ = denominator;
  std::int64_t total = 0;
  for (const Entry& e : entries) {
    if (e.numerator < 0) throw InvalidDistribution("negative mass at vertex " + std::to_string(e.vertex));
    total = checked_add(total, e.numerator);
    if (e.numerator == 0) continue;
    if (!d.entries_.empty() && d.entries_.back().vertex == e.vertex) {
      d.entries_.back().numerator += e.numerator;
    } else {
      d.entries_.push_back(e);
    }
  }
  if (total != denominator) {
    throw InvalidDistribution("masses sum to " + std::to_string(total) + "/" + std::to_string(denominator));
  }
  return d;
}

std::int64_t RationalDist::numerator_at(Vertex v) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, Vertex key) { return e.vertex < key; });
  return (it != entries_.end() && it->vertex == v) ? it->numerator : 0;
}

RationalDist RationalDist::rescaled(std::int64_t denominator) const {
  if (denominator <= 0 || denominator % denominator_ != 0) {
    throw std::invalid_argument("rescale target is not a multiple of the denominator");
  }
  const std::int64_t factor = denominator / denominator_;
  RationalDist d = *this;
  d.denominator_ = denominator;
  for (auto& e : d.entries_) e.numerator = checked_mul(e.numerator, factor);
  return d;
}

bool operator==(const RationalDist& a, const RationalDist& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].vertex != b.entries_[i].vertex) return false;
    if (static_cast<__int128>(a.entries_[i].numerator) * b.denominator_ !=
        static_cast<__int128>(b.entries_[i].numerator) * a.denominator_) {
      return false;
    }
  }
  return true;
}

Rational l1_distance(const RationalDist& p, const RationalDist& q) {
  const __int128 pd = p.denominator();
  const __int128 qd = q.denominator();
  const auto pe = p.entries();
  const auto qe = q.entries();
  __int128 total = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pe.size() || j < qe.size()) {
    if (j == qe.size() || (i < pe.size() && pe[i].vertex < qe[j].vertex)) {
      total += pe[i++].numerator * qd;
    } else if (i == pe.size() || qe[j].vertex < pe[i].vertex) {
      total += qe[j++].numerator * pd;
    } else {
      const __int128 diff = pe[i++].numerator * qd - qe[j++].numerator * pd;
      total += diff < 0 ? -diff : diff;
    }
  }
  return Rational::from_wide(total, pd * qd);
}

WitnessFunction uniform_ball_witness(const BoundedDegreeGraph& g, int r) {
  if (r < 0) throw std::invalid_argument("negative radius");
  WitnessFunction w;
  w.radius = r;
  w.dists.reserve(static_cast<std::size_t>(g.num_vertices()));
  BallExtractor ex(g);
  for (Vertex x = 0; x < g.num_vertices(); ++x) w.dists.push_back(RationalDist::uniform(ex.reach(x, r)));
  return w;
}

UniformityReport check_uniformity(const BoundedDegreeGraph& g, const WitnessFunction& w, bool keep_table) {
  if (w.dists.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("witness does not match graph size");
  }
  UniformityReport report;
  BallExtractor ex(g);
  std::vector<int> mark(static_cast<std::size_t>(g.num_vertices()), -1);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const RationalDist& f = w.dists[x];
    if (f.empty()) {
      report.sums_ok = false;
      continue;
    }
    for (Vertex z : ex.reach(x, w.radius)) mark[z] = x;
    for (const auto& e : f.entries()) {
      if (!g.contains(e.vertex) || mark[e.vertex] != x) {
        if (report.support_ok) report.first_support_violation = x;
        report.support_ok = false;
        break;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    const Rational l1 = l1_distance(w.dists[e.u], w.dists[e.v]);
    if (!report.worst_edge || l1 > report.max_edge_l1) {
      report.max_edge_l1 = l1;
      report.worst_edge = e;
    }
    if (keep_table) report.per_edge.emplace_back(e, l1);
  }
  return report;
}

int support_radius(const BoundedDegreeGraph& g, const WitnessFunction& w) {
  int best = 0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const auto& f = w.dists[x];
    if (f.empty()) continue;
    const std::vector<int> dist = bfs_distances(g, x);
    for (const auto& e : f.entries()) {
      if (dist[e.vertex] < 0) throw InvalidDistribution("mass outside the component of its vertex");
      best = std::max(best, dist[e.vertex]);
    }
  }
  return best;
}

RationalDist discretize(const RationalDist& f, std::int64_t alpha) {
  if (alpha < 1) throw InfeasibleAlpha("alpha must be positive");
  if (f.empty()) throw InvalidDistribution("cannot discretize an empty measure");
  struct Slot {
    Vertex vertex;
    std::int64_t floor;
    std::int64_t remainder;
  };
  const __int128 den = f.denominator();
  std::vector<Slot> slots;
  slots.reserve(f.support_size());
  std::int64_t floor_sum = 0;
  for (const auto& e : f.entries()) {
    const __int128 scaled = static_cast<__int128>(e.numerator) * alpha;
    const auto fl = narrow_wide(scaled / den);
    slots.push_back({e.vertex, fl, narrow_wide(scaled % den)});
    floor_sum += fl;
  }
  // The fractional parts sum to the integer alpha - floor_sum, and each is
  // below one, so at least that many entries have a positive remainder.
  std::int64_t raise = alpha - floor_sum;
  if (raise < 0 || raise > static_cast<std::int64_t>(slots.size())) {
    throw InfeasibleAlpha("rounding cannot reach total mass 1");
  }
  std::vector<std::size_t> order(slots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return slots[a].remainder > slots[b].remainder; });
  for (std::size_t i = 0; i < static_cast<std::size_t>(raise); ++i) ++slots[order[i]].floor;
  std::vector<RationalDist::Entry> out;
  out.reserve(slots.size());
  for (const auto& s : slots) out.push_back({s.vertex, s.floor});
  return RationalDist::from_entries(alpha, std::move(out));
}

std::int64_t required_alpha(std::int64_t max_ball, const Rational& eps, const Rational& eps_prime) {
  if (!(eps < eps_prime)) throw std::invalid_argument("need eps < eps_prime");
  return (Rational(checked_mul(3, max_ball)) / (eps_prime - eps)).ceil();
}

WitnessFunction discretize_witness(const BoundedDegreeGraph& g, const WitnessFunction& w, const Rational& eps,
                                   const Rational& eps_prime, std::int64_t alpha) {
  const UniformityReport report = check_uniformity(g, w);
  if (!report.uniform_at(eps)) {
    throw NotUniform("witness measures " + report.max_edge_l1.str() + " (support " +
                     (report.support_ok ? "ok" : "violated") + "), not within " + eps.str());
  }
  const std::int64_t needed = required_alpha(max_ball_size_actual(g, w.radius), eps, eps_prime);
  if (alpha < needed) {
    throw InfeasibleAlpha("alpha " + std::to_string(alpha) + " below required " + std::to_string(needed));
  }
  WitnessFunction out;
  out.radius = w.radius;
  out.dists.reserve(w.dists.size());
  for (const auto& f : w.dists) out.dists.push_back(discretize(f, alpha));
  return out;
}

std::vector<Vertex> nearest_in_subgraph(const BoundedDegreeGraph& g, const std::vector<char>& member) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> tau(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> frontier;
  for (Vertex v = 0; v < n; ++v) {
    if (member[v]) {
      tau[v] = v;
      frontier.push_back(v);
    }
  }
  // Layered BFS: a vertex first reached in layer k takes the smallest tau
  // among its neighbours in layer k-1, which is the smallest nearest point.
  std::vector<Vertex> next;
  while (!frontier.empty()) {
    next.clear();
    for (Vertex u : frontier) {
      for (Vertex w : g.neighbors(u)) {
        if (tau[w] == -1) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<Vertex> chosen(next.size(), -1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (Vertex u : g.neighbors(next[i])) {
        if (tau[u] != -1 && (chosen[i] == -1 || tau[u] < chosen[i])) chosen[i] = tau[u];
      }
    }
    for (std::size_t i = 0; i < next.size(); ++i) tau[next[i]] = chosen[i];
    frontier.swap(next);
  }
  return tau;
}

RelativeWitness project_witness(const BoundedDegreeGraph& g, const WitnessFunction& w,
                                const std::vector<char>& member) {
  if (std::none_of(member.begin(), member.end(), [](char c) { return c != 0; })) {
    throw EmptySubgraph("projection onto an empty subgraph");
  }
  const std::vector<Vertex> tau = nearest_in_subgraph(g, member);
  RelativeWitness out;
  out.radius = 2 * w.radius;
  out.member = member;
  out.dists.resize(static_cast<std::size_t>(g.num_vertices()));
  std::vector<RationalDist::Entry> scratch;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!member[x]) continue;
    const RationalDist& f = w.dists[x];
    scratch.clear();
    for (const auto& e : f.entries()) {
      if (tau[e.vertex] < 0) throw InvalidDistribution("mass in a component disjoint from the subgraph");
      scratch.push_back({tau[e.vertex], e.numerator});
    }
    out.dists[x] = RationalDist::from_entries(f.denominator(), scratch);
  }
  return out;
}

}  // namespace apls
