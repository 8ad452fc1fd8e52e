#pragma once

// Dispatch behind the `cubecon` command-line tool. Kept in the library so
// golden tests can drive it without spawning processes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubecon/ballots.hpp"
#include "cubecon/consensus.hpp"
#include "cubecon/errors.hpp"
#include "cubecon/lab/axioms.hpp"
#include "cubecon/lab/function.hpp"
#include "cubecon/metrics.hpp"

namespace cubecon::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kGuard = 3, kInternal = 4 };

struct RunConfig {
  std::string function = "med";  // med | cen | mean | lp | am | maj | score | axioms | search
  std::optional<double> p;
  std::string format = "text";   // text | json
  std::uint64_t seed = 0;
  Limits limits;
  std::size_t bound_n = 3;       // --exhaustive-bounds n,k
  std::size_t bound_k = 3;
  std::size_t trials = 200;      // search mode
  std::size_t random_n = 6;      // --random-bounds n,k
  std::size_t random_k = 6;
  std::string target = "med";    // function under test in axioms/search mode
  std::optional<std::string> vertex;  // score mode
};

struct RunOutput {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

inline bool needs_ballots(const RunConfig& config) {
  return config.function != "axioms" && config.function != "search";
}

inline void validate(const RunConfig& config) {
  static const std::vector<std::string> kSelectors{"med", "cen", "mean", "lp", "am",
                                                   "maj", "score", "axioms", "search"};
  if (std::find(kSelectors.begin(), kSelectors.end(), config.function) == kSelectors.end()) {
    throw ValidationError("unknown --function '" + config.function + "'");
  }
  if (config.format != "text" && config.format != "json") {
    throw ValidationError("--format must be text or json");
  }
  if (config.function == "lp" && !config.p) throw ValidationError("--function lp requires --p");
  if (config.p) (void)Exponent(*config.p);
  if (config.function == "score" && !config.vertex) {
    throw ValidationError("--function score requires --vertex");
  }
  if (config.bound_n < 1 || config.bound_k < 1 || config.random_n < 1 || config.random_k < 1) {
    throw ValidationError("profile bounds must be positive");
  }
  if ((config.function == "axioms" || config.function == "search") && config.target == "lp" &&
      !config.p) {
    throw ValidationError("--target lp requires --p");
  }
}

inline nlohmann::ordered_json score_json(const Score& s) {
  if (const auto* i = std::get_if<std::int64_t>(&s)) return *i;
  return std::get<double>(s);
}

inline nlohmann::ordered_json exponent_json(double p) {
  const Exponent e(p);
  if (e.integral()) return static_cast<std::int64_t>(*e.integral());
  return p;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline RunOutput consensus_report(const RunConfig& config, const BallotFile& ballots) {
  const Profile& pi = ballots.ballots;
  std::string label = config.function;
  std::optional<double> p;
  ConsensusOutcome outcome{{}, std::int64_t{0}};
  if (config.function == "med") {
    outcome = median(pi, config.limits);
  } else if (config.function == "am") {
    outcome = anti_median(pi, config.limits);
  } else if (config.function == "cen") {
    outcome = center(pi, config.limits);
  } else {
    p = config.function == "mean" ? 2.0 : *config.p;
    label = "lp";
    outcome = lp_consensus(pi, Exponent(*p), config.limits);
  }

  RunOutput result;
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    auto winners = nlohmann::ordered_json::array();
    for (const auto& w : outcome.winners) winners.push_back(w.to_string());
    doc["winners"] = winners;
    doc["score"] = score_json(outcome.score);
    doc["function"] = label;
    if (p) doc["p"] = exponent_json(*p);
    if (!ballots.candidates.empty()) {
      auto names = nlohmann::ordered_json::array();
      for (const auto& w : outcome.winners) names.push_back(candidate_names(ballots, w));
      doc["winner_names"] = names;
    }
    result.out = doc.dump() + "\n";
    return result;
  }
  std::ostringstream os;
  os << "function: " << label << "\n";
  if (p) os << "p: " << exponent_json(*p).dump() << "\n";
  os << "score: " << score_json(outcome.score).dump() << "\n";
  os << "winners (" << outcome.winners.size() << "):\n";
  for (const auto& w : outcome.winners) {
    os << "  " << w.to_string();
    if (!ballots.candidates.empty()) os << "  {" << join(candidate_names(ballots, w), ", ") << "}";
    os << "\n";
  }
  result.out = os.str();
  return result;
}

inline RunOutput majority_report(const RunConfig& config, const BallotFile& ballots) {
  const ColumnStats stats = column_sums(ballots.ballots);
  const Vertex w = maj(stats);
  const Vertex m = min_vertex(stats);
  const TieSet ties = condorcet_ties(stats);
  RunOutput result;
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["maj"] = w.to_string();
    doc["min"] = m.to_string();
    doc["ties"] = ties.coordinates;
    doc["condorcet_score"] = ties.condorcet_score();
    doc["column_sums"] = stats.sums;
    doc["k"] = stats.length;
    result.out = doc.dump() + "\n";
    return result;
  }
  std::ostringstream os;
  os << "k: " << stats.length << "\n";
  os << "column sums:";
  for (const auto c : stats.sums) os << " " << c;
  os << "\nmaj: " << w.to_string() << "\nmin: " << m.to_string() << "\n";
  os << "condorcet score: " << ties.condorcet_score() << "\nties:";
  for (const auto t : ties.coordinates) os << " " << t;
  os << "\n";
  result.out = os.str();
  return result;
}

inline RunOutput vertex_report(const RunConfig& config, const BallotFile& ballots) {
  const Vertex x = Vertex::parse(*config.vertex);
  const Profile& pi = ballots.ballots;
  require_same_dimension(pi, x);
  nlohmann::ordered_json doc;
  doc["vertex"] = x.to_string();
  doc["eccentricity"] = eccentricity(x, pi);
  doc["status"] = status(x, pi);
  doc["square_status"] = square_status(x, pi);
  if (config.p) {
    doc["p"] = exponent_json(*config.p);
    doc["lp_status"] = score_json(lp_score(x, pi, Exponent(*config.p)));
  }
  RunOutput result;
  if (config.format == "json") {
    result.out = doc.dump() + "\n";
    return result;
  }
  std::ostringstream os;
  for (const auto& [key, value] : doc.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  result.out = os.str();
  return result;
}

inline RunOutput axiom_report(const RunConfig& config) {
  const Exponent p(config.p.value_or(1.0));
  const lab::ConsensusFunction f = lab::builtin(config.target, p, config.limits);
  lab::Mode mode;
  if (config.function == "axioms") {
    mode = lab::Exhaustive{config.bound_n, config.bound_k, 1};
  } else {
    mode = lab::Randomized{config.trials, config.seed, config.random_n, config.random_k, 1};
  }
  std::vector<lab::AxiomVerdict> verdicts{
      lab::check_translation(f, mode), lab::check_consistency(f, mode), lab::check_maj(f, mode),
      lab::check_min(f, mode), lab::check_rr(f, mode)};

  RunOutput result;
  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["function"] = f.name();
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) list.push_back(lab::to_json(v));
    doc["verdicts"] = list;
    result.out = doc.dump() + "\n";
    return result;
  }
  std::ostringstream os;
  os << "function: " << f.name() << "\n";
  for (const auto& v : verdicts) {
    os << v.axiom << ": " << lab::to_string(v.result) << " (" << v.profiles_checked
       << " checked)\n";
    if (v.witness) {
      for (const auto& pi : v.witness->profiles) os << "  profile: " << lab::to_json(pi).dump() << "\n";
      for (const auto& x : v.witness->vertices) os << "  vertex: " << x.to_string() << "\n";
      os << "  " << v.witness->lhs << "\n  " << v.witness->rhs << "\n";
    }
  }
  result.out = os.str();
  return result;
}

}  // namespace detail

// Runs one request. Never throws; errors become exit codes and messages.
inline RunOutput run(const RunConfig& config, const std::optional<BallotFile>& ballots) {
  try {
    validate(config);
    if (config.function == "axioms" || config.function == "search") {
      return detail::axiom_report(config);
    }
    if (!ballots) throw ValidationError("this function needs a ballot file");
    if (config.function == "maj") return detail::majority_report(config, *ballots);
    if (config.function == "score") return detail::vertex_report(config, *ballots);
    return detail::consensus_report(config, *ballots);
  } catch (const GuardExceeded& e) {
    return {kGuard, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return {kValidation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const DimensionMismatch& e) {
    return {kValidation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kValidation, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace cubecon::cli
