// cubecon: consensus functions and axiom checks for approval ballots.
//
//   cubecon ballots.txt --function med --format json
//   cubecon ballots.json --function lp --p 2.5
//   cubecon --function axioms --target cen --exhaustive-bounds 3,3

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cubecon/ballots.hpp"
#include "cubecon/cli.hpp"

namespace {

bool parse_pair(const std::string& text, std::size_t& a, std::size_t& b) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    a = std::stoul(text.substr(0, comma));
    b = std::stoul(text.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using cubecon::cli::RunConfig;
  RunConfig config;
  std::string input = "-";
  std::string exhaustive_bounds;
  std::string random_bounds;
  std::optional<double> p;
  std::optional<std::string> vertex;

  CLI::App app{"Consensus functions on the n-cube for approval ballots"};
  app.add_option("input", input, "Ballot file (line or JSON format); '-' reads stdin");
  app.add_option("--function", config.function,
                 "med | cen | mean | lp | am | maj | score | axioms | search");
  app.add_option("--p", p, "Exponent for lp (real >= 1)");
  app.add_option("--format", config.format, "text | json");
  app.add_option("--seed", config.seed, "Seed for randomized axiom search");
  app.add_option("--max-scan-n", config.limits.max_scan_n, "Largest n allowed for 2^n scans");
  app.add_option("--max-tie-expansion", config.limits.max_tie_expansion,
                 "Largest Condorcet score allowed for 2^Cs expansion");
  app.add_option("--workers", config.limits.workers, "Threads used by vertex scans");
  app.add_option("--exhaustive-bounds", exhaustive_bounds, "n,k bounds for axioms mode");
  app.add_option("--random-bounds", random_bounds, "n,k bounds for search mode");
  app.add_option("--trials", config.trials, "Random trials for search mode");
  app.add_option("--target", config.target, "Function checked in axioms/search mode");
  app.add_option("--vertex", vertex, "Vertex evaluated by the score function");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cubecon::cli::kValidation;
  }
  config.p = p;
  config.vertex = vertex;
  if (!exhaustive_bounds.empty() &&
      !parse_pair(exhaustive_bounds, config.bound_n, config.bound_k)) {
    std::cerr << "error: --exhaustive-bounds expects n,k\n";
    return cubecon::cli::kValidation;
  }
  if (!random_bounds.empty() && !parse_pair(random_bounds, config.random_n, config.random_k)) {
    std::cerr << "error: --random-bounds expects n,k\n";
    return cubecon::cli::kValidation;
  }

  std::optional<cubecon::BallotFile> ballots;
  if (cubecon::cli::needs_ballots(config)) {
    try {
      if (input == "-") {
        ballots = cubecon::parse_ballots(std::cin);
      } else {
        std::ifstream file(input);
        if (!file) {
          std::cerr << "error: cannot open " << input << "\n";
          return cubecon::cli::kValidation;
        }
        ballots = cubecon::parse_ballots(file);
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << input << ": " << e.what() << "\n";
      return cubecon::cli::kValidation;
    }
  }

  const auto result = cubecon::cli::run(config, ballots);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
