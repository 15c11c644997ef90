#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "apls/errors.hpp"
#include "apls/io.hpp"
#include "apls/measures.hpp"
#include "apls/separators.hpp"

namespace apls::cli {

namespace {

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int require_r(const RunConfig& config) {
  if (!config.r) throw std::invalid_argument("--r is required for this witness");
  if (*config.r < 0) throw std::invalid_argument("--r must be nonnegative");
  return *config.r;
}

struct ChosenWitness {
  WitnessFunction w;
  std::string source;
};

ChosenWitness shift_witness(const RunConfig& config, const BoundedDegreeGraph& g, const FamilySpec& family) {
  int k = 0;
  if (config.k_shift) {
    k = *config.k_shift;
  } else {
    k = require_r(config) + 1;
  }
  if (k < 2) throw std::invalid_argument("--k-shift must be at least 2");
  SeparatorDistribution dist;
  if (std::holds_alternative<PathSpec>(family) || std::holds_alternative<CycleSpec>(family)) {
    dist = path_shift_distribution(g, k);
  } else if (const auto* grid = std::get_if<GridSpec>(&family)) {
    dist = grid_shift_distribution(g, grid->rows, grid->cols, k);
  } else {
    dist = tree_depth_shift_distribution(g, k);
  }
  return {witness_from_separators(g, dist), "shift:" + describe(family) + ":k=" + std::to_string(k)};
}

ChosenWitness choose_witness(const RunConfig& config, const BoundedDegreeGraph& g) {
  const std::string& kind = config.witness;
  if (kind == "uniform-ball") return {uniform_ball_witness(g, require_r(config)), "uniform-ball"};
  if (kind.rfind("separators:", 0) == 0) {
    const std::string path = kind.substr(std::string("separators:").size());
    const auto dist = io::read_file(path, [&](std::istream& is) { return io::read_sepdist(is, g); });
    return {witness_from_separators(g, dist), "separators:" + std::to_string(dist.support().size())};
  }
  if (kind == "auto") {
    const auto family = recognize_family(g);
    if (family && !std::holds_alternative<RandomRegularSpec>(*family)) return shift_witness(config, g, *family);
    return {uniform_ball_witness(g, require_r(config)), "uniform-ball"};
  }
  throw std::invalid_argument("unknown witness source '" + kind + "'");
}

// Smallest multiple of the witness denominators that reaches `needed`, so the
// rounding is exact; falls back to `needed` when that would be unwieldy.
std::int64_t choose_alpha(const WitnessFunction& w, std::int64_t needed) {
  constexpr std::int64_t cap = 1'000'000'000;
  std::int64_t common = 1;
  try {
    for (const auto& f : w.dists) {
      common = checked_lcm(common, f.denominator());
      if (common > cap) return needed;
    }
    return checked_mul((needed + common - 1) / common, common);
  } catch (const std::overflow_error&) {
    return needed;
  }
}

Predicate predicate_of(const RunConfig& config) {
  const auto p = parse_predicate(config.predicate);
  if (!p) throw std::invalid_argument("unknown predicate '" + config.predicate + "'");
  return *p;
}

std::int64_t locality_of(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling) {
  if (config.K) return *config.K;
  if (labeling.params.K) return *labeling.params.K;
  return default_locality(g, labeling.params.r);
}

std::string guarantee(const BoundedDegreeGraph& g, const Rational& eps_prime) {
  const std::int64_t d = g.degree_bound();
  return (Rational(d * d) * eps_prime / Rational(2)).str();
}

template <class Writer>
void emit(const RunConfig& config, std::ostream& out, Writer write) {
  if (config.out.empty() || config.out == "-") {
    write(out);
    out.flush();
    return;
  }
  io::write_file(config.out, write);
}

void need_inputs(const RunConfig& config, std::size_t count) {
  if (config.inputs.size() != count) {
    throw std::invalid_argument(config.subcommand + " expects " + std::to_string(count) + " input file(s)");
  }
}

BoundedDegreeGraph load_graph(const std::string& path) { return io::read_file(path, io::read_graph); }
ProofLabeling load_labels(const std::string& path) { return io::read_file(path, io::read_labels); }

}  // namespace

void write_report(std::ostream& os, const Report& report) {
  for (const auto& [key, value] : report) os << key << " = " << value << '\n';
}

FamilySpec parse_family(const RunConfig& config) {
  const auto& f = config.family;
  const auto& n = config.n;
  auto want = [&](std::size_t count) {
    if (n.size() != count) {
      throw InfeasibleSpec("family " + f + " takes " + std::to_string(count) + " --n value(s)");
    }
  };
  auto as_int = [](std::int64_t v) {
    if (v < 0 || v > (std::int64_t{1} << 30)) throw InfeasibleSpec("size " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  };
  if (f == "grid") {
    want(2);
    return GridSpec{as_int(n[0]), as_int(n[1])};
  }
  if (f == "path") {
    want(1);
    return PathSpec{as_int(n[0])};
  }
  if (f == "cycle") {
    want(1);
    return CycleSpec{as_int(n[0])};
  }
  if (f == "tree" || f == "full_tree") {
    want(2);
    return FullTreeSpec{as_int(n[0]), as_int(n[1])};
  }
  if (f == "random_regular") {
    want(2);
    return RandomRegularSpec{as_int(n[0]), as_int(n[1]), config.seed};
  }
  throw InfeasibleSpec("unknown family '" + f + "'");
}

BoundedDegreeGraph cmd_generate(const RunConfig& config) { return generate(parse_family(config)); }

ProveResult cmd_prove(const RunConfig& config, const BoundedDegreeGraph& g) {
  if (!config.eps_prime) throw std::invalid_argument("--eps-prime is required");
  const Rational eps_prime = *config.eps_prime;
  if (!(eps_prime > Rational(0))) throw std::invalid_argument("--eps-prime must be positive");

  ChosenWitness chosen = choose_witness(config, g);
  WitnessFunction& w = chosen.w;
  w.radius = std::max(support_radius(g, w), config.r.value_or(0));
  const UniformityReport uniformity = check_uniformity(g, w);
  if (!uniformity.support_ok || !uniformity.sums_ok) throw InvalidDistribution("witness is not a valid measure field");

  Rational eps = uniformity.max_edge_l1;
  if (config.eps) {
    if (eps > *config.eps) throw NotUniform("witness measures " + eps.str() + ", above --eps " + config.eps->str());
    eps = *config.eps;
  }
  if (!(eps < eps_prime)) {
    throw WitnessTooRough("witness measures " + eps.str() + ", not below eps' " + eps_prime.str());
  }
  const int r = w.radius;
  const std::int64_t needed = required_alpha(max_ball_size_actual(g, r), eps, eps_prime);
  const std::int64_t alpha = config.alpha ? *config.alpha : choose_alpha(w, needed);
  const WitnessFunction quantized = discretize_witness(g, w, eps, eps_prime, alpha);

  SchemeParams params;
  params.d = g.degree_bound();
  params.r = r;
  params.eps = eps;
  params.eps_prime = eps_prime;
  params.alpha = alpha;
  params.K = config.K ? *config.K : default_locality(g, r);
  const auto colors = distance_coloring(g, std::max(1, 2 * r));

  ProveResult result;
  result.labeling = build_proof(g, quantized, colors, params);
  result.witness_source = chosen.source;
  result.eps = eps;
  result.report = {{"n", str(g.num_vertices())},
                   {"m", str(g.num_edges())},
                   {"d", str(g.degree_bound())},
                   {"witness", chosen.source},
                   {"r", str(r)},
                   {"eps", eps.str()},
                   {"eps_prime", eps_prime.str()},
                   {"alpha", str(alpha)},
                   {"palette", str(result.labeling.params.palette)},
                   {"K", str(*params.K)}};
  return result;
}

VerifyResult cmd_verify(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling) {
  VerifyResult result;
  result.predicate = predicate_of(config);
  result.K = locality_of(config, g, labeling);
  if (result.K < 0) throw MalformedLabeling("negative locality radius");
  // Beyond n every ball is already the whole component.
  const int horizon = static_cast<int>(std::min<std::int64_t>(result.K, g.num_vertices()));
  result.verdict = pipeline_verify(g, labeling, horizon, result.predicate, config.jobs);
  return result;
}

ExtractResult cmd_extract(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling) {
  const WitnessFunction decoded = decode_accepted_witness(g, labeling, config.jobs);
  ExtractResult result;
  result.decoded_eps = check_uniformity(g, decoded).max_edge_l1;
  const Rational eps = config.eps ? *config.eps : result.decoded_eps;
  if (result.decoded_eps > eps) {
    throw NotUniform("decoded witness measures " + result.decoded_eps.str() + ", above --eps " + eps.str());
  }
  result.partition = extract_partition(g, decoded, eps);
  result.edit = edit_distance_upper_bound(g, result.partition, predicate_of(config));
  const auto& p = result.partition;
  result.report = {{"decoded_eps", result.decoded_eps.str()},
                   {"extraction_eps", eps.str()},
                   {"blocks", str(p.blocks.size())},
                   {"max_block", str(p.max_block())},
                   {"block_bound", str(p.certified_block_bound())},
                   {"removed", str(p.removed.size())},
                   {"removed_per_vertex", Rational(static_cast<std::int64_t>(p.removed.size()),
                                                   std::max<std::int64_t>(1, g.num_vertices()))
                                              .str()},
                   {"removal_budget", p.removal_budget(g).str()},
                   {"edit_bound", result.edit.feasible ? result.edit.bound.str() : "unbounded"}};
  return result;
}

Report cmd_report(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling) {
  const VerifyResult v = cmd_verify(config, g, labeling);
  const auto& p = labeling.params;
  Report report = {{"n", str(g.num_vertices())},
                   {"m", str(g.num_edges())},
                   {"d", str(g.degree_bound())},
                   {"max_degree", str(g.max_degree())},
                   {"r", str(p.r)},
                   {"alpha", str(p.alpha)},
                   {"palette", str(p.palette)},
                   {"eps_prime", p.eps_prime.str()},
                   {"K", str(v.K)},
                   {"predicate", std::string(to_string(v.predicate))},
                   {"verdict", v.verdict.accepted() ? "accept" : "reject"},
                   {"rejecting", str(v.verdict.num_rejecting())},
                   {"apls_guarantee", guarantee(g, p.eps_prime)}};
  if (verify_property_a(g, labeling, config.jobs).accepted()) {
    const ExtractResult e = cmd_extract(config, g, labeling);
    report.insert(report.end(), e.report.begin(), e.report.end());
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& sub = config.subcommand;
    if (sub == "gen") {
      need_inputs(config, 0);
      const auto g = cmd_generate(config);
      emit(config, out, [&](std::ostream& os) { io::write_graph(os, g); });
      return 0;
    }
    if (sub == "prove") {
      need_inputs(config, 1);
      const auto g = load_graph(config.inputs[0]);
      const auto result = cmd_prove(config, g);
      emit(config, out, [&](std::ostream& os) { io::write_labels(os, result.labeling); });
      write_report(err, result.report);
      return 0;
    }
    need_inputs(config, 2);
    const auto g = load_graph(config.inputs[0]);
    const auto labeling = load_labels(config.inputs[1]);
    if (sub == "verify") {
      const auto result = cmd_verify(config, g, labeling);
      emit(config, out, [&](std::ostream& os) { io::write_verdict(os, result.verdict); });
      return result.verdict.accepted() ? 0 : 1;
    }
    if (sub == "extract") {
      const auto result = cmd_extract(config, g, labeling);
      emit(config, out, [&](std::ostream& os) { io::write_partition(os, g.num_vertices(), result.partition); });
      write_report(err, result.report);
      return 0;
    }
    if (sub == "report") {
      const auto report = cmd_report(config, g, labeling);
      emit(config, out, [&](std::ostream& os) { write_report(os, report); });
      for (const auto& [key, value] : report) {
        if (key == "verdict") return value == "accept" ? 0 : 1;
      }
      return 1;
    }
    throw std::invalid_argument("unknown subcommand '" + sub + "'");
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return 2;
  } catch (const MalformedLabeling& e) {
    err << "malformed labeling: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace apls::cli
