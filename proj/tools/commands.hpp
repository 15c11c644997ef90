#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apls/generators.hpp"
#include "apls/graph.hpp"
#include "apls/hyperfinite.hpp"
#include "apls/labeling.hpp"
#include "apls/planarity.hpp"
#include "apls/rational.hpp"
#include "apls/verifier.hpp"

namespace apls::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;  // positional: graph file, then labeling file
  std::string out;                  // empty or "-" for stdout

  std::string family;
  std::vector<std::int64_t> n;
  std::uint64_t seed = 0;

  std::optional<int> r;
  std::optional<Rational> eps;
  std::optional<Rational> eps_prime;
  std::optional<std::int64_t> alpha;
  std::optional<int> k_shift;
  std::optional<std::int64_t> K;
  std::string witness = "auto";
  std::string predicate = "planar";
  int jobs = 1;
};

using Report = std::vector<std::pair<std::string, std::string>>;

void write_report(std::ostream& os, const Report& report);

/// Family name plus --n values: grid R C, path N, cycle N, tree B DEPTH,
/// random_regular N DEG (with --seed). Throws InfeasibleSpec.
FamilySpec parse_family(const RunConfig& config);

BoundedDegreeGraph cmd_generate(const RunConfig& config);

struct ProveResult {
  ProofLabeling labeling;
  std::string witness_source;
  Rational eps;  // measured on the unrounded witness
  Report report;
};

/// Throws WitnessTooRough when the measured eps is not below eps'.
ProveResult cmd_prove(const RunConfig& config, const BoundedDegreeGraph& g);

struct VerifyResult {
  Verdict verdict;
  std::int64_t K = 0;
  Predicate predicate = Predicate::planar;
};

/// K comes from --K, else the labeling header, else default_locality.
VerifyResult cmd_verify(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling);

struct ExtractResult {
  PartitionResult partition;
  Rational decoded_eps;
  EditDistanceBound edit;
  Report report;
};

/// Throws NotAccepted if the labeling is rejected.
ExtractResult cmd_extract(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling);

Report cmd_report(const RunConfig& config, const BoundedDegreeGraph& g, const ProofLabeling& labeling);

/// Full subcommand including file I/O. Returns the process exit code:
/// 0 success or accept, 1 reject or infeasible, 2 usage or format error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace apls::cli
