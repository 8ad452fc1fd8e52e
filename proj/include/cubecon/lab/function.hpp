#pragma once

#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <utility>

#include "cubecon/consensus.hpp"
#include "cubecon/errors.hpp"
#include "cubecon/lab/oracle.hpp"
#include "cubecon/lab/profile_space.hpp"
#include "cubecon/metrics.hpp"
#include "cubecon/profile.hpp"

namespace cubecon::lab {

// A named map from profiles to non-empty vertex sets. Every call checks
// the range contract and returns the set sorted and duplicate-free.
class ConsensusFunction {
 public:
  using Evaluator = std::function<VertexSet(const Profile&)>;

  ConsensusFunction(std::string name, Evaluator evaluator)
      : name_(std::move(name)), evaluator_(std::move(evaluator)) {}

  const std::string& name() const noexcept { return name_; }

  VertexSet operator()(const Profile& pi) const {
    VertexSet out = canonical_set(evaluator_(pi));
    if (out.empty()) {
      throw InvariantBreach("consensus function '" + name_ + "' returned an empty set");
    }
    for (const auto& v : out) {
      if (v.dimension() != pi.dimension()) {
        throw InvariantBreach("consensus function '" + name_ +
                              "' returned a vertex of the wrong dimension");
      }
    }
    return out;
  }

 private:
  std::string name_;
  Evaluator evaluator_;
};

inline std::string exponent_label(Exponent p) {
  std::ostringstream os;
  os << p.value();
  return os.str();
}

inline ConsensusFunction med_function(Limits limits = {}) {
  return {"med", [limits](const Profile& pi) { return median(pi, limits).winners; }};
}

inline ConsensusFunction am_function(Limits limits = {}) {
  return {"am", [limits](const Profile& pi) { return anti_median(pi, limits).winners; }};
}

inline ConsensusFunction cen_function(Limits limits = {}) {
  return {"cen", [limits](const Profile& pi) { return center(pi, limits).winners; }};
}

inline ConsensusFunction lp_function(Exponent p, Limits limits = {}) {
  return {"lp(" + exponent_label(p) + ")",
          [p, limits](const Profile& pi) { return lp_consensus(pi, p, limits).winners; }};
}

inline ConsensusFunction mean_function(Limits limits = {}) {
  return {"mean", [limits](const Profile& pi) { return mean(pi, limits).winners; }};
}

// f1: projection onto the first ballot.
inline ConsensusFunction f1_function() {
  return {"f1", [](const Profile& pi) { return VertexSet{pi[0]}; }};
}

// f2: the whole vertex set.
inline ConsensusFunction f2_function(std::size_t guard = kDefaultScanGuard) {
  return {"f2", [guard](const Profile& pi) {
            check_scan_guard(pi.dimension(), guard);
            return all_vertices(pi.dimension());
          }};
}

// f3: the vertices appearing in the profile.
inline ConsensusFunction f3_function() {
  return {"f3", [](const Profile& pi) {
            return VertexSet(pi.begin(), pi.end());
          }};
}

// Output depends only on the dimension.
inline ConsensusFunction constant_function(std::string name,
                                           std::function<VertexSet(std::size_t)> output) {
  return {std::move(name), [output = std::move(output)](const Profile& pi) {
            return output(pi.dimension());
          }};
}

inline std::string objective_label(Objective objective, Sense sense, Exponent p) {
  std::string base;
  switch (objective) {
    case Objective::eccentricity: base = "eccentricity"; break;
    case Objective::status: base = "status"; break;
    case Objective::lp_status: base = "lp_status(" + exponent_label(p) + ")"; break;
  }
  return std::string("oracle-") + (sense == Sense::minimize ? "argmin-" : "argmax-") + base;
}

inline ConsensusFunction oracle_function(Objective objective, Sense sense,
                                         Exponent p = Exponent(1.0),
                                         std::size_t guard = kDefaultScanGuard) {
  return {objective_label(objective, sense, p), [=](const Profile& pi) {
            return oracle_argopt(pi, objective, sense, p, guard).winners;
          }};
}

// Optimizes a user-supplied score over all 2^n vertices. Real scores are
// compared with kScoreTolerance.
inline ConsensusFunction from_score(std::string name,
                                    std::function<double(const Vertex&, const Profile&)> score,
                                    Sense sense, std::size_t guard = kDefaultScanGuard) {
  return {std::move(name), [score = std::move(score), sense, guard](const Profile& pi) {
            check_scan_guard(pi.dimension(), guard);
            const VertexSet cube = all_vertices(pi.dimension());
            std::vector<double> values;
            values.reserve(cube.size());
            for (const auto& x : cube) values.push_back(score(x, pi));
            double best = values.front();
            for (const auto s : values) {
              best = sense == Sense::minimize ? std::min(best, s) : std::max(best, s);
            }
            VertexSet out;
            for (std::size_t i = 0; i < cube.size(); ++i) {
              if (std::abs(values[i] - best) <= kScoreTolerance) out.push_back(cube[i]);
            }
            return out;
          }};
}

// Builtins by CLI name: med, am, cen, mean, lp (uses p), f1, f2, f3.
inline ConsensusFunction builtin(const std::string& name, Exponent p = Exponent(1.0),
                                 Limits limits = {}) {
  if (name == "med") return med_function(limits);
  if (name == "am") return am_function(limits);
  if (name == "cen") return cen_function(limits);
  if (name == "mean") return mean_function(limits);
  if (name == "lp") return lp_function(p, limits);
  if (name == "f1") return f1_function();
  if (name == "f2") return f2_function(limits.max_scan_n);
  if (name == "f3") return f3_function();
  throw ValidationError("unknown consensus function '" + name + "'");
}

}  // namespace cubecon::lab
