// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. All comparisons are exact rationals.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "apls/errors.hpp"
#include "apls/generators.hpp"
#include "apls/hyperfinite.hpp"
#include "apls/io.hpp"
#include "apls/planarity.hpp"
#include "apls/separators.hpp"
#include "apls/verifier.hpp"
#include "commands.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace apls;
namespace fs = std::filesystem;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

struct Accepted {
  std::string name;
  BoundedDegreeGraph g;
  ProofLabeling labeling;
};

// Shared state: files live in a scratch directory, accepted labelings are
// collected for the soundness sweep.
struct Context {
  fs::path dir;
  std::vector<Accepted> accepted;

  std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli_run(const cli::RunConfig& c) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(c, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string report_value(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
  }
  return "";
}

cli::RunConfig gen_config(const Context& ctx, const std::string& family, std::vector<std::int64_t> n,
                          const std::string& out, std::uint64_t seed = 0) {
  cli::RunConfig c;
  c.subcommand = "gen";
  c.family = family;
  c.n = std::move(n);
  c.seed = seed;
  c.out = ctx.path(out);
  return c;
}

cli::RunConfig stage_config(const Context& ctx, const std::string& sub, std::vector<std::string> inputs,
                            const std::string& out = "") {
  cli::RunConfig c;
  c.subcommand = sub;
  for (auto& in : inputs) c.inputs.push_back(ctx.path(in));
  c.out = out.empty() ? "" : ctx.path(out);
  return c;
}

BoundedDegreeGraph load_graph(const std::string& p) { return io::read_file(p, io::read_graph); }
ProofLabeling load_labels(const std::string& p) { return io::read_file(p, io::read_labels); }

std::string criterion_grid(Context& ctx) {
  require(cli_run(gen_config(ctx, "grid", {50, 50}, "grid50.graph")).code == 0, "gen grid failed");
  const auto g = load_graph(ctx.path("grid50.graph"));
  const Rational oracle_eps = oracle::max_edge_l1(g, oracle::uniform_ball(g, 10));
  require(oracle_eps <= Rational(7, 20), "oracle uniformity " + oracle_eps.str() + " above 7/20");

  const auto start = std::chrono::steady_clock::now();
  auto prove = stage_config(ctx, "prove", {"grid50.graph"}, "grid50.labels");
  prove.witness = "uniform-ball";
  prove.r = 10;
  prove.eps_prime = Rational(1, 2);
  const auto proved = cli_run(prove);
  require(proved.code == 0, "prove failed: " + proved.err);
  require(report_value(proved.err, "eps") == oracle_eps.str(), "prover eps differs from the oracle");
  const auto verified = cli_run(stage_config(ctx, "verify", {"grid50.graph", "grid50.labels"}));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(verified.code == 0 && verified.out == "verdict accept\n", "verifier rejected the grid labeling");
  require(seconds < 60.0, "prove + verify took " + std::to_string(seconds) + " s");

  const auto lab = load_labels(ctx.path("grid50.labels"));
  const auto verdict = verify_property_a(g, lab);
  require(verdict.num_rejecting() == 0 && verdict.decisions.size() == 2500, "not all 2500 vertices accept");
  ctx.accepted.push_back({"grid 50x50 r=10", g, lab});
  std::ostringstream os;
  os << "eps=" << oracle_eps.str() << " alpha=" << lab.params.alpha << " palette=" << lab.params.palette
     << " 2500/2500 accept in " << static_cast<int>(seconds * 1000) << " ms";
  return os.str();
}

std::string criterion_small_families(Context& ctx) {
  struct Case {
    std::string name;
    std::string family;
    std::vector<std::int64_t> n;
    Rational oracle_eps;
  };
  const auto path = generate(PathSpec{100});
  const auto cycle = generate(CycleSpec{100});
  const auto tree = generate(FullTreeSpec{2, 8});
  std::vector<std::pair<std::vector<Vertex>, Rational>> layers(6);
  const auto dist = oracle::all_pairs(tree);
  for (Vertex v = 0; v < tree.num_vertices(); ++v) layers[static_cast<std::size_t>(dist[0][v] % 6)].first.push_back(v);
  for (auto& l : layers) l.second = Rational(1, 6);

  std::vector<Case> cases;
  cases.push_back({"P_100", "path", {100}, oracle::max_edge_l1(path, oracle::uniform_ball(path, 5))});
  cases.push_back({"C_100", "cycle", {100}, oracle::max_edge_l1(cycle, oracle::uniform_ball(cycle, 5))});
  cases.push_back({"T(2,8)", "tree", {2, 8}, oracle::max_edge_l1(tree, oracle::separator_witness(tree, layers))});
  std::string summary;
  for (auto& c : cases) {
    const std::string gfile = c.family + ".graph";
    require(cli_run(gen_config(ctx, c.family, c.n, gfile)).code == 0, "gen " + c.name + " failed");
    std::string first;
    for (int rerun = 0; rerun < 2; ++rerun) {
      const std::string lfile = c.family + std::to_string(rerun) + ".labels";
      auto prove = stage_config(ctx, "prove", {gfile}, lfile);
      if (c.family == "tree") {
        prove.witness = "auto";
        prove.k_shift = 6;
        prove.eps_prime = Rational(5, 6);
      } else {
        prove.witness = "uniform-ball";
        prove.r = 5;
        prove.eps_prime = Rational(1, 2);
      }
      const auto proved = cli_run(prove);
      require(proved.code == 0, c.name + " prove failed: " + proved.err);
      const auto eps = report_value(proved.err, "eps");
      require(eps == c.oracle_eps.str(), c.name + " eps " + eps + " differs from oracle " + c.oracle_eps.str());
      const auto verified = cli_run(stage_config(ctx, "verify", {gfile, lfile}));
      require(verified.code == 0, c.name + " rejected");
      if (rerun == 0) {
        first = slurp(ctx.path(lfile));
      } else {
        require(slurp(ctx.path(lfile)) == first, c.name + " labels differ across runs");
      }
    }
    ctx.accepted.push_back({c.name, load_graph(ctx.path(gfile)), load_labels(ctx.path(c.family + "0.labels"))});
    summary += (summary.empty() ? "" : ", ") + c.name + " eps=" + c.oracle_eps.str();
  }
  return summary + "; stable across reruns";
}

std::string criterion_discretization(Context&) {
  std::mt19937_64 rng(1234);
  std::size_t checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = oracle::random_graph(40, 3 + trial % 3, 90, rng);
    const Vertex x = static_cast<Vertex>(rng() % 40);
    const int radius = 1 + static_cast<int>(rng() % 3);
    const auto ball = oracle::ball_set(oracle::all_pairs(g), x, radius);
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 97);
    std::vector<std::int64_t> weights(ball.size(), 0);
    std::int64_t total = 0;
    for (auto& w : weights) {
      w = static_cast<std::int64_t>(rng() % 5);
      total += w;
    }
    if (total == 0) {
      weights[0] = 1;
      total = 1;
    }
    std::vector<RationalDist::Entry> entries;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (weights[i] > 0) entries.push_back({ball[i], weights[i] * den});
    }
    const auto f = RationalDist::from_entries(total * den, entries);
    const Rational eps(static_cast<std::int64_t>(rng() % 50), 100);
    const Rational eps_prime = eps + Rational(1 + static_cast<std::int64_t>(rng() % 100), 100);
    const auto alpha = required_alpha(static_cast<std::int64_t>(ball.size()), eps, eps_prime);
    const auto q = discretize(f, alpha);
    std::int64_t sum = 0;
    for (const auto& e : q.entries()) sum += e.numerator;
    require(q.denominator() == alpha && sum == alpha, "discretized mass is not alpha/alpha");
    const Rational err = l1_distance(f, q);
    const Rational ball_over_alpha(static_cast<std::int64_t>(ball.size()), alpha);
    require(err <= ball_over_alpha, "l1 error above |B|/alpha");
    require(ball_over_alpha <= (eps_prime - eps) / Rational(3), "|B|/alpha above (eps'-eps)/3");
    ++checked;
  }
  std::size_t edges = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(50, 3 + trial % 2, 100, rng);
    const int r = 1 + trial % 3;
    const auto w = uniform_ball_witness(g, r);
    const Rational eps = oracle::max_edge_l1(g, oracle::uniform_ball(g, r));
    const Rational eps_prime = eps + Rational(1 + trial % 7, 8);
    const auto alpha = required_alpha(max_ball_size_actual(g, r), eps, eps_prime);
    const auto q = discretize_witness(g, w, eps, eps_prime, alpha);
    const auto dense = oracle::dense_witness(q);
    const Rational bound = Rational(2) * (eps_prime - eps) / Rational(3) + eps;
    for (const Edge& e : g.edges()) {
      require(oracle::l1(dense[e.u], dense[e.v]) <= bound, "edge above 2(eps'-eps)/3 + eps");
      ++edges;
    }
    for (const auto& f : dense) require(oracle::mass(f) == Rational(1), "quantized measure does not sum to one");
  }
  return std::to_string(checked) + " distributions, " + std::to_string(edges) + " witness edges";
}

std::string criterion_separator_witness(Context&) {
  const auto g = generate(GridSpec{30, 30});
  const auto d = grid_shift_distribution(g, 30, 30, 10);
  const Rational marginal = max_marginal(d).value;
  require(marginal <= Rational(2, 10), "max marginal " + marginal.str());
  std::vector<std::pair<std::vector<Vertex>, Rational>> samples;
  for (int s1 = 0; s1 < 10; ++s1) {
    for (int s2 = 0; s2 < 10; ++s2) {
      std::vector<Vertex> y;
      for (int i = 0; i < 30; ++i) {
        for (int j = 0; j < 30; ++j) {
          if (i % 10 == s1 || j % 10 == s2) y.push_back(i * 30 + j);
        }
      }
      samples.emplace_back(std::move(y), Rational(1, 100));
    }
  }
  const auto expected = oracle::separator_witness(g, samples);
  const auto w = witness_from_separators(g, d);
  require(oracle::dense_witness(w) == expected, "witness differs from the oracle");
  const Rational worst = oracle::max_edge_l1(g, expected);
  require(worst <= Rational(8, 10), "edge l1 " + worst.str());
  require(check_uniformity(g, w).max_edge_l1 == worst, "library and oracle disagree on max edge l1");
  const auto dist = oracle::all_pairs(g);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (const auto& [z, v] : expected[x]) require(dist[x][z] >= 0 && dist[x][z] <= 81, "support outside B_81");
  }
  std::size_t identities = 0;
  for (const auto& ws : d.support()) {
    const auto& y = ws.sample.removed;
    for (const Edge& e : g.edges()) {
      if (std::binary_search(y.begin(), y.end(), e.u) || std::binary_search(y.begin(), y.end(), e.v)) continue;
      require(separator_contribution(g, ws.sample, ws.weight, e.u) ==
                  separator_contribution(g, ws.sample, ws.weight, e.v),
              "f_{Y,x} != f_{Y,y} on an uncut edge");
      ++identities;
    }
  }
  return "max marginal " + marginal.str() + ", max edge l1 " + worst.str() + ", support radius " +
         std::to_string(support_radius(g, w)) + ", " + std::to_string(identities) + " edge identities";
}

std::string criterion_area_coarea(Context&) {
  std::mt19937_64 rng(555);
  const std::vector<BoundedDegreeGraph> graphs{generate(GridSpec{8, 9}), generate(PathSpec{40}),
                                               generate(CycleSpec{33}), generate(FullTreeSpec{3, 3}),
                                               generate(RandomRegularSpec{60, 3, 42})};
  for (int trial = 0; trial < 500; ++trial) {
    const auto& g = graphs[static_cast<std::size_t>(trial) % graphs.size()];
    std::vector<Rational> zeta;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 16);
      zeta.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q + 1)), q);
    }
    const auto ac = area_coarea_check(g, zeta);
    require(ac.holds(), "identity fails on trial " + std::to_string(trial));
    Rational lhs;
    for (const Edge& e : g.edges()) lhs += Rational(2) * (zeta[e.u] - zeta[e.v]).abs();
    Rational mass;
    for (const auto& z : zeta) mass += z;
    require(ac.coarea_lhs == lhs && ac.area_lhs == mass, "left-hand sides differ from direct sums");
  }
  return "500 random functions on 5 families";
}

std::string criterion_extraction(Context& ctx) {
  // Adversarial but accepted labelings join the honest ones.
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 200 && ctx.accepted.size() < 40; ++trial) {
    const auto g = trial % 2 ? generate(CycleSpec{16}) : generate(GridSpec{4, 6});
    auto lab = fixture::honest_labeling(g, 1, Rational(3, 2));
    std::uniform_int_distribution<std::size_t> slot(0, lab.tables.size() - 1);
    for (int e = 0; e < 1 + trial % 3; ++e) {
      const auto i = slot(rng);
      const auto j = slot(rng);
      const auto moved = std::min(lab.tables[i], lab.params.alpha - lab.tables[j]);
      lab.tables[i] -= moved;
      lab.tables[j] += moved;
    }
    if (verify_property_a(g, lab).accepted()) ctx.accepted.push_back({"corrupted #" + std::to_string(trial), g, lab});
  }
  ProofLabeling c9;
  c9.params.r = 1;
  c9.params.alpha = 3;
  c9.params.palette = 3;
  c9.params.eps_prime = Rational(2, 3);
  for (int i = 0; i < 9; ++i) c9.colors.push_back(i % 3);
  c9.tables.assign(27, 1);
  ctx.accepted.push_back({"periodic C_9", generate(CycleSpec{9}), c9});

  std::string c100;
  std::size_t with_edit = 0;
  for (const auto& a : ctx.accepted) {
    const auto& g = a.g;
    const auto& p = a.labeling.params;
    const auto w = decode_accepted_witness(g, a.labeling);
    const Rational measured = check_uniformity(g, w).max_edge_l1;
    require(measured <= p.eps_prime, a.name + ": decoded witness measures " + measured.str());
    const auto part = extract_partition(g, w, measured);
    const std::int64_t ball = max_ball_size_actual(g, 2 * p.r);
    require(static_cast<std::int64_t>(part.max_block()) <= ball, a.name + ": block above |B_2r|");
    const Rational d(g.degree_bound());
    require(Rational(static_cast<std::int64_t>(part.removed.size())) <=
                d * d * p.eps_prime / Rational(2) * Rational(g.num_vertices()),
            a.name + ": |W| above the budget");
    const auto report = check_hyperfinite(g, part, d * d * p.eps_prime / Rational(2), ball);
    require(report.ok, a.name + ": check_hyperfinite fails");
    const auto K = a.labeling.params.K.value_or(default_locality(g, p.r));
    const int horizon = static_cast<int>(std::min<std::int64_t>(K, g.num_vertices()));
    if (pipeline_verify(g, a.labeling, horizon, Predicate::planar).accepted()) {
      require(edit_distance_upper_bound(g, part, Predicate::planar).feasible, a.name + ": edit bound infinite");
      ++with_edit;
    }
    if (a.name == "C_100") {
      require(part.removed.size() <= 36 && part.max_block() <= 21, "C_100 bounds");
      c100 = "C_100 |W|=" + std::to_string(part.removed.size()) + " max block " + std::to_string(part.max_block());
    }
  }
  require(!c100.empty(), "C_100 instance missing");
  return std::to_string(ctx.accepted.size()) + " accepted labelings, " + std::to_string(with_edit) +
         " with finite edit bound; " + c100;
}

std::string criterion_expander(Context& ctx) {
  require(cli_run(gen_config(ctx, "random_regular", {200, 3}, "rr.graph", 42)).code == 0, "gen rr failed");
  const auto g = load_graph(ctx.path("rr.graph"));
  // Frozen from the brute-force oracle below.
  const std::vector<Rational> pinned{Rational(1), Rational(4, 5), Rational(4, 5), Rational(4, 5), Rational(26, 37),
                                     Rational(33, 61)};
  std::string values;
  for (int r = 1; r <= 6; ++r) {
    const Rational eps = oracle::max_edge_l1(g, oracle::uniform_ball(g, r));
    require(eps == pinned[static_cast<std::size_t>(r - 1)], "r=" + std::to_string(r) + " measures " + eps.str());
    require(eps > Rational(3, 10), "r=" + std::to_string(r) + " not above 3/10");
    require(check_uniformity(g, uniform_ball_witness(g, r)).max_edge_l1 == eps, "library disagrees with oracle");
    auto prove = stage_config(ctx, "prove", {"rr.graph"}, "rr.labels");
    prove.witness = "uniform-ball";
    prove.r = r;
    prove.eps_prime = Rational(3, 10);
    const auto proved = cli_run(prove);
    require(proved.code == 1 && proved.err.find("not below eps'") != std::string::npos,
            "prover did not decline at r=" + std::to_string(r));
    values += (values.empty() ? "" : " ") + eps.str();
  }
  const auto big = cli_run(stage_config(ctx, "verify", {"rr.graph", "grid50.labels"}));
  require(big.code == 2, "50x50 grid labels on rr should be malformed (size mismatch)");
  const auto grid = generate(GridSpec{10, 20});
  const auto lab = fixture::honest_labeling(grid, 2, Rational(2));
  require(verify_property_a(grid, lab).accepted(), "10x20 grid labeling rejected on its own graph");
  const auto moved = pipeline_verify(g, lab, 2, Predicate::planar);
  require(!moved.accepted(), "transplanted labeling accepted");
  return "eps(r=1..6) = " + values + "; WitnessTooRough at 3/10; transplant rejected at " +
         std::to_string(moved.num_rejecting()) + "/200 vertices";
}

std::string criterion_product(Context&) {
  const auto graphs = fixture::all_small_graphs();
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const fixture::RandomVerifier v1{1, 1000 + 2 * s, Check::custom};
    const fixture::RandomVerifier v2{1, 1001 + 2 * s, Check::properness};
    const auto [n, bad] = fixture::product_language_check(v1, v2, graphs);
    instances += n;
    mismatches += bad;
  }
  require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return std::to_string(graphs.size()) + " graphs, 50 verifier pairs, " + std::to_string(instances) +
         " labeled instances, 0 mismatches";
}

std::string criterion_planarity(Context&) {
  for (const auto& g : {oracle::complete(5), oracle::complete_bipartite(3, 3), oracle::petersen()}) {
    require(!is_planar(g), "Kuratowski-type graph reported planar");
  }
  for (const auto& g : {generate(GridSpec{10, 10}), generate(GridSpec{1, 7}), generate(FullTreeSpec{2, 6}),
                        generate(FullTreeSpec{3, 4}), generate(CycleSpec{3}), generate(CycleSpec{50}),
                        oracle::wheel(8)}) {
    require(is_planar(g), "planar family reported nonplanar");
  }
  const auto g = disjoint_union(generate(GridSpec{5, 5}), oracle::complete(5));
  const auto v = verify_locally_p(g, 2, Predicate::planar);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    require(v.decisions[x].has_value() == (x >= 25), "vertex " + std::to_string(x) + " decided wrongly");
  }
  return "K5, K3,3, Petersen nonplanar; grids, trees, cycles, W_8 planar; 5/30 rejections on grid+K5";
}

std::string criterion_anonymity(Context& ctx) {
  const auto g = generate(GridSpec{12, 12});
  auto lab = fixture::honest_labeling(g, 1, Rational(2));
  lab.tables[40] = 0;
  lab.colors[100] = lab.colors[101];
  const auto base_a = verify_property_a(g, lab);
  const auto base_p = pipeline_verify(g, lab, 2, Predicate::planar);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 10; ++t) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto pg = permute(g, perm);
    const auto pl = fixture::permute_labeling(lab, perm);
    const auto a = verify_property_a(pg, pl);
    const auto p = pipeline_verify(pg, pl, 2, Predicate::planar);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      require(a.decisions[perm[x]] == base_a.decisions[x], "Property-A decision moved");
      require(p.decisions[perm[x]] == base_p.decisions[x], "pipeline decision moved");
    }
    require(a.accepted() == base_a.accepted() && p.accepted() == base_p.accepted(), "global verdict changed");
  }

  std::vector<std::string> first;
  for (int jobs : {1, 1, 2, 4, 8}) {
    std::vector<std::string> outputs;
    require(cli_run(gen_config(ctx, "random_regular", {120, 3}, "det.graph", 7)).code == 0, "gen failed");
    outputs.push_back(slurp(ctx.path("det.graph")));
    require(cli_run(gen_config(ctx, "grid", {24, 24}, "detg.graph")).code == 0, "gen failed");
    outputs.push_back(slurp(ctx.path("detg.graph")));
    auto prove = stage_config(ctx, "prove", {"detg.graph"}, "detg.labels");
    prove.witness = "uniform-ball";
    prove.r = 4;
    prove.eps_prime = Rational(3, 4);
    prove.jobs = jobs;
    const auto proved = cli_run(prove);
    require(proved.code == 0, "prove failed: " + proved.err);
    outputs.push_back(slurp(ctx.path("detg.labels")) + proved.err);
    for (const std::string sub : {"verify", "extract", "report"}) {
      auto c = stage_config(ctx, sub, {"detg.graph", "detg.labels"}, sub == "extract" ? "detg.part" : "");
      c.jobs = jobs;
      const auto res = cli_run(c);
      require(res.code == 0, sub + " failed: " + res.err);
      outputs.push_back(res.out + res.err + (sub == "extract" ? slurp(ctx.path("detg.part")) : ""));
    }
    if (first.empty()) {
      first = outputs;
    } else {
      require(outputs == first, "outputs differ at --jobs " + std::to_string(jobs));
    }
  }
  return "10 permutations equivariant; gen/prove/verify/extract/report byte-identical over reruns and jobs 1,2,4,8";
}

}  // namespace

int main() {
  Context ctx;
  ctx.dir = fs::temp_directory_path() / "apls_acceptance";
  fs::remove_all(ctx.dir);
  fs::create_directories(ctx.dir);

  const std::vector<std::pair<std::string, std::function<std::string(Context&)>>> criteria{
      {"grid completeness", criterion_grid},
      {"path/cycle/tree completeness", criterion_small_families},
      {"discretization", criterion_discretization},
      {"separator witness bounds", criterion_separator_witness},
      {"area/coarea", criterion_area_coarea},
      {"extraction soundness", criterion_extraction},
      {"expander rejection", criterion_expander},
      {"product verifier", criterion_product},
      {"planarity predicate", criterion_planarity},
      {"anonymity/determinism", criterion_anonymity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = criteria[i].second(ctx);
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    failed += ok ? 0 : 1;
  }
  fs::remove_all(ctx.dir);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
