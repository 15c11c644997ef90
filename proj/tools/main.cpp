#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

struct RawFlags {
  std::optional<std::string> eps;
  std::optional<std::string> eps_prime;
};

void add_common(CLI::App* sub, apls::cli::RunConfig& config, RawFlags& raw) {
  sub->add_option("inputs", config.inputs, "graph file, then labeling file");
  sub->add_option("--out", config.out, "output path (default: stdout)");
  sub->add_option("--family", config.family, "grid | path | cycle | tree | random_regular");
  sub->add_option("--n", config.n, "family sizes, e.g. --n 50 50")->expected(1, 3);
  sub->add_option("--seed", config.seed, "seed for random families");
  sub->add_option("--r", config.r, "local horizon of the witness");
  sub->add_option("--eps", raw.eps, "uniformity level num/den");
  sub->add_option("--eps-prime", raw.eps_prime, "acceptance threshold num/den");
  sub->add_option("--alpha", config.alpha, "quantization override");
  sub->add_option("--k-shift", config.k_shift, "shift period for separator witnesses");
  sub->add_option("--K", config.K, "locally-P horizon");
  sub->add_option("--witness", config.witness, "uniform-ball | separators:<file> | auto");
  sub->add_option("--predicate", config.predicate, "planar | acyclic | true");
  sub->add_option("--jobs", config.jobs, "verifier threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate proof labeling toolkit"};
  app.require_subcommand(1);
  apls::cli::RunConfig config;
  RawFlags raw;
  const std::pair<const char*, const char*> subcommands[] = {
      {"gen", "write a graph from a named family"},
      {"prove", "build a proof labeling for a graph"},
      {"verify", "run the local verifier on a labeled graph"},
      {"extract", "decode an accepted labeling into a partition"},
      {"report", "verify, extract and summarize"},
  };
  for (const auto& [name, help] : subcommands) add_common(app.add_subcommand(name, help), config, raw);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (raw.eps) config.eps = apls::Rational::parse(*raw.eps);
    if (raw.eps_prime) config.eps_prime = apls::Rational::parse(*raw.eps_prime);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  return apls::cli::run(config, std::cout, std::cerr);
}
