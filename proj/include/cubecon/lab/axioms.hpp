#pragma once

// Mechanical checks of consensus axioms over enumerated or sampled profiles.
//
// A failing verdict carries a witness that `replays` can feed back through
// the axiom's definition to reproduce the violation.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cubecon/consensus.hpp"
#include "cubecon/lab/function.hpp"
#include "cubecon/lab/profile_space.hpp"
#include "cubecon/profile.hpp"

namespace cubecon::lab {

enum class Result { holds, fails, holds_within_trials, inapplicable };

inline const char* to_string(Result r) {
  switch (r) {
    case Result::holds: return "holds";
    case Result::fails: return "fails";
    case Result::holds_within_trials: return "holds-within-trials";
    case Result::inapplicable: return "inapplicable";
  }
  return "?";
}

struct Witness {
  std::vector<Profile> profiles;
  std::vector<Vertex> vertices;
  std::string lhs;  // the two sides of the violated relation, rendered
  std::string rhs;
};

struct AxiomVerdict {
  std::string axiom;
  std::string function;
  Mode mode;
  Result result = Result::holds;
  std::optional<Witness> witness;
  std::size_t profiles_checked = 0;
  nlohmann::ordered_json details;  // null unless the check has extra findings

  bool holds() const noexcept {
    return result == Result::holds || result == Result::holds_within_trials;
  }
};

// A vertex chosen per dimension, e.g. the origin or the all-ones vertex.
struct Anchor {
  std::string label;
  std::function<std::optional<Vertex>(std::size_t)> at;
};

inline Anchor origin_anchor() {
  return {"0", [](std::size_t n) { return std::optional<Vertex>(Vertex::zeros(n)); }};
}

inline Anchor ones_anchor() {
  return {"1", [](std::size_t n) { return std::optional<Vertex>(Vertex::ones(n)); }};
}

// Only defined in the vertex's own dimension.
inline Anchor fixed_anchor(Vertex x0) {
  std::string label = x0.to_string();
  return {std::move(label), [x0 = std::move(x0)](std::size_t n) {
            return n == x0.dimension() ? std::optional<Vertex>(x0) : std::nullopt;
          }};
}

namespace detail {

inline std::string render(const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs[i].to_string();
  }
  return out + "}";
}

inline const char* truth(bool b) { return b ? "true" : "false"; }

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Result passing(const Mode& mode) {
  return std::holds_alternative<Exhaustive>(mode) ? Result::holds : Result::holds_within_trials;
}

inline AxiomVerdict verdict(std::string axiom, const ConsensusFunction& f, const Mode& mode) {
  AxiomVerdict v;
  v.axiom = std::move(axiom);
  v.function = f.name();
  v.mode = mode;
  v.result = passing(mode);
  return v;
}

inline std::uint64_t mode_seed(const Mode& mode) {
  if (const auto* r = std::get_if<Randomized>(&mode)) return r->seed;
  return 0;
}

// Translation vectors to try for π: all of Q_n in exhaustive mode, a few
// seeded samples otherwise.
inline VertexSet shifts_for(const Profile& pi, const Mode& mode, std::mt19937_64& rng) {
  const std::size_t n = pi.dimension();
  if (std::holds_alternative<Exhaustive>(mode)) return all_vertices(n);
  VertexSet out{Vertex::ones(n), unit_vertex(n, 1)};
  for (int i = 0; i < 4; ++i) out.push_back(random_vertex(rng, n));
  return out;
}

// (T) as a biconditional for one (π, v): returns the offending u, if any.
inline std::optional<Vertex> translation_violation(const VertexSet& at_pi,
                                                   const VertexSet& at_shifted,
                                                   const Vertex& v) {
  for (const auto& u : at_pi) {
    if (!contains(at_shifted, u ^ v)) return u;
  }
  for (const auto& w : at_shifted) {
    if (!contains(at_pi, w ^ v)) return w ^ v;
  }
  return std::nullopt;
}

}  // namespace detail

// (T): u ∈ f(π) iff u ⊕ v ∈ f(π ⊕ v).
inline AxiomVerdict check_translation(const ConsensusFunction& f, const Mode& mode) {
  AxiomVerdict out = detail::verdict("T", f, mode);
  std::mt19937_64 rng(detail::mode_seed(mode) ^ 0x5452414e534cULL);
  out.profiles_checked = for_each_profile(mode, [&](const Profile& pi) {
    const VertexSet at_pi = f(pi);
    for (const auto& v : detail::shifts_for(pi, mode, rng)) {
      const Profile shifted = translate(pi, v);
      const VertexSet at_shifted = f(shifted);
      if (auto u = detail::translation_violation(at_pi, at_shifted, v)) {
        out.result = Result::fails;
        out.witness = Witness{{pi},
                              {*u, v},
                              std::string("u in f(pi) = ") + detail::truth(contains(at_pi, *u)),
                              std::string("u^v in f(pi^v) = ") +
                                  detail::truth(contains(at_shifted, *u ^ v))};
        return false;
      }
    }
    return true;
  });
  return out;
}

// Agreement at x0: x0 ∈ f(π) iff x0 ∈ g(π).
inline AxiomVerdict check_agreement(const ConsensusFunction& f, const ConsensusFunction& g,
                                    const Anchor& x0, const Mode& mode) {
  AxiomVerdict out = detail::verdict("Agreement(" + x0.label + ")", f, mode);
  out.function = f.name() + " vs " + g.name();
  out.profiles_checked = for_each_profile(mode, [&](const Profile& pi) {
    const auto anchor = x0.at(pi.dimension());
    if (!anchor) return true;
    const bool in_f = contains(f(pi), *anchor);
    const bool in_g = contains(g(pi), *anchor);
    if (in_f != in_g) {
      out.result = Result::fails;
      out.witness = Witness{{pi},
                            {*anchor},
                            std::string("x0 in f(pi) = ") + detail::truth(in_f),
                            std::string("x0 in g(pi) = ") + detail::truth(in_g)};
      return false;
    }
    return true;
  });
  return out;
}

// Both functions satisfy (T) and agree at x0, hence must be equal. Any
// profile where they differ is a refutation, which can only mean a bug in
// one of the two implementations.
inline AxiomVerdict verify_theorem1(const ConsensusFunction& f, const ConsensusFunction& g,
                                    const Anchor& x0, const Exhaustive& bounds) {
  const Mode mode = bounds;
  AxiomVerdict out = detail::verdict("Theorem1", f, mode);
  out.function = f.name() + " vs " + g.name();
  const AxiomVerdict tf = check_translation(f, mode);
  const AxiomVerdict tg = check_translation(g, mode);
  const AxiomVerdict agree = check_agreement(f, g, x0, mode);
  out.details = {{"x0", x0.label},
                 {"translation_f", to_string(tf.result)},
                 {"translation_g", to_string(tg.result)},
                 {"agreement", to_string(agree.result)}};
  if (!tf.holds() || !tg.holds() || !agree.holds()) {
    out.result = Result::inapplicable;
    return out;
  }
  out.profiles_checked = for_each_profile(mode, [&](const Profile& pi) {
    const VertexSet a = f(pi);
    const VertexSet b = g(pi);
    if (a != b) {
      out.result = Result::fails;
      out.witness = Witness{{pi}, {}, "f(pi) = " + detail::render(a), "g(pi) = " + detail::render(b)};
      return false;
    }
    return true;
  });
  return out;
}

// (C): f(π1) ∩ f(π2) ≠ ∅ implies f(π1π2) = f(π1) ∩ f(π2).
inline AxiomVerdict check_consistency(const ConsensusFunction& f, const Mode& mode) {
  AxiomVerdict out = detail::verdict("C", f, mode);
  out.profiles_checked = for_each_profile_pair(mode, [&](const Profile& a, const Profile& b) {
    const VertexSet common = detail::intersect(f(a), f(b));
    if (common.empty()) return true;
    const VertexSet joined = f(concat(a, b));
    if (joined != common) {
      out.result = Result::fails;
      out.witness = Witness{{a, b},
                            {},
                            "f(pi1 pi2) = " + detail::render(joined),
                            "f(pi1) & f(pi2) = " + detail::render(common)};
      return false;
    }
    return true;
  });
  return out;
}

// (Maj): Maj(π) ∈ f(π).
inline AxiomVerdict check_maj(const ConsensusFunction& f, const Mode& mode) {
  AxiomVerdict out = detail::verdict("Maj", f, mode);
  out.profiles_checked = for_each_profile(mode, [&](const Profile& pi) {
    const Vertex w = maj(pi);
    const VertexSet fs = f(pi);
    if (!contains(fs, w)) {
      out.result = Result::fails;
      out.witness = Witness{{pi}, {w}, "Maj(pi) = " + w.to_string(), "f(pi) = " + detail::render(fs)};
      return false;
    }
    return true;
  });
  return out;
}

// (Min): Min(π) ∈ f(π).
inline AxiomVerdict check_min(const ConsensusFunction& f, const Mode& mode) {
  AxiomVerdict out = detail::verdict("Min", f, mode);
  out.profiles_checked = for_each_profile(mode, [&](const Profile& pi) {
    const Vertex m = min_vertex(pi);
    const VertexSet fs = f(pi);
    if (!contains(fs, m)) {
      out.result = Result::fails;
      out.witness = Witness{{pi}, {m}, "Min(pi) = " + m.to_string(), "f(pi) = " + detail::render(fs)};
      return false;
    }
    return true;
  });
  return out;
}

// (RR): |f(π)| <= 2^Cs(π). Also reports whether equality held throughout.
inline AxiomVerdict check_rr(const ConsensusFunction& f, const Mode& mode) {
  AxiomVerdict out = detail::verdict("RR", f, mode);
  bool always_equal = true;
  out.profiles_checked = for_each_profile(mode, [&](const Profile& pi) {
    const std::size_t cs = condorcet_ties(pi).condorcet_score();
    const std::size_t size = f(pi).size();
    const long double bound = std::ldexp(1.0L, static_cast<int>(cs));
    if (static_cast<long double>(size) != bound) always_equal = false;
    if (static_cast<long double>(size) > bound) {
      out.result = Result::fails;
      out.witness = Witness{{pi},
                            {},
                            "|f(pi)| = " + std::to_string(size),
                            "2^Cs(pi) = 2^" + std::to_string(cs)};
      return false;
    }
    return true;
  });
  out.details = {{"cardinality_equals_bound", always_equal}};
  return out;
}

// The intersection hypothesis ⋂_{x ∈ Q_n} f((x)) ≠ ∅, together with (T) and
// (C) over `hypotheses`. When all three hold, also checks the conclusion
// f = f2 on the same profiles.
inline AxiomVerdict check_intersection_condition(const ConsensusFunction& f, std::size_t n,
                                                 std::size_t guard = kDefaultScanGuard,
                                                 std::optional<Mode> hypotheses = std::nullopt) {
  check_scan_guard(n, guard);
  const Mode mode = hypotheses.value_or(Mode{Exhaustive{n, 2, n}});
  AxiomVerdict out = detail::verdict("IntersectionCondition", f, mode);

  const VertexSet cube = all_vertices(n);
  VertexSet common = cube;
  std::vector<Profile> singles;
  for (const auto& x : cube) {
    singles.push_back(Profile{x});
    common = detail::intersect(common, f(singles.back()));
    ++out.profiles_checked;
    if (common.empty()) break;
  }
  std::vector<std::string> rendered;
  for (const auto& v : common) rendered.push_back(v.to_string());

  const AxiomVerdict t = check_translation(f, mode);
  const AxiomVerdict c = check_consistency(f, mode);
  const bool met = !common.empty() && t.holds() && c.holds();
  out.details = {{"dimension", n},
                 {"intersection", rendered},
                 {"translation", to_string(t.result)},
                 {"consistency", to_string(c.result)},
                 {"hypotheses_met", met}};

  if (common.empty()) {
    out.result = Result::fails;
    out.witness = Witness{singles, {}, "intersection of f over these profiles = {}", "nonempty"};
    out.details["equals_f2"] = nullptr;
    return out;
  }
  out.result = Result::holds;
  if (met) {
    bool equal = true;
    for_each_profile(mode, [&](const Profile& pi) {
      equal = f(pi).size() == (std::size_t{1} << pi.dimension());
      return equal;
    });
    out.details["equals_f2"] = equal;
  } else {
    out.details["equals_f2"] = nullptr;
  }
  return out;
}

// Re-checks a failing verdict's witness against the axiom's definition.
// `g` is needed for agreement and Theorem 1 witnesses.
inline bool replays(const AxiomVerdict& v, const ConsensusFunction& f,
                    const ConsensusFunction* g = nullptr) {
  if (v.result != Result::fails || !v.witness) return false;
  const Witness& w = *v.witness;
  if (v.axiom == "T") {
    const Profile& pi = w.profiles.at(0);
    const Vertex& u = w.vertices.at(0);
    const Vertex& shift = w.vertices.at(1);
    return contains(f(pi), u) != contains(f(translate(pi, shift)), u ^ shift);
  }
  if (v.axiom.rfind("Agreement", 0) == 0) {
    if (g == nullptr) return false;
    const Profile& pi = w.profiles.at(0);
    const Vertex& x0 = w.vertices.at(0);
    return contains(f(pi), x0) != contains((*g)(pi), x0);
  }
  if (v.axiom == "Theorem1") {
    if (g == nullptr) return false;
    return f(w.profiles.at(0)) != (*g)(w.profiles.at(0));
  }
  if (v.axiom == "C") {
    const Profile& a = w.profiles.at(0);
    const Profile& b = w.profiles.at(1);
    const VertexSet common = detail::intersect(f(a), f(b));
    return !common.empty() && f(concat(a, b)) != common;
  }
  if (v.axiom == "Maj") return !contains(f(w.profiles.at(0)), maj(w.profiles.at(0)));
  if (v.axiom == "Min") return !contains(f(w.profiles.at(0)), min_vertex(w.profiles.at(0)));
  if (v.axiom == "RR") {
    const Profile& pi = w.profiles.at(0);
    const std::size_t cs = condorcet_ties(pi).condorcet_score();
    return static_cast<long double>(f(pi).size()) > std::ldexp(1.0L, static_cast<int>(cs));
  }
  if (v.axiom == "IntersectionCondition") {
    if (w.profiles.empty()) return false;
    VertexSet common = f(w.profiles.front());
    for (const auto& pi : w.profiles) common = detail::intersect(common, f(pi));
    return common.empty();
  }
  return false;
}

// ---- JSON -----------------------------------------------------------------

inline nlohmann::ordered_json to_json(const Profile& pi) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& x : pi) out.push_back(x.to_string());
  return out;
}

inline nlohmann::ordered_json to_json(const Mode& mode) {
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    return {{"kind", "exhaustive"}, {"min_n", ex->min_n}, {"max_n", ex->max_n}, {"max_k", ex->max_k}};
  }
  const auto& r = std::get<Randomized>(mode);
  return {{"kind", "randomized"},
          {"trials", r.trials},
          {"min_n", r.min_n},
          {"max_n", r.max_n},
          {"max_k", r.max_k}};
}

inline nlohmann::ordered_json to_json(const AxiomVerdict& v) {
  nlohmann::ordered_json out;
  out["axiom"] = v.axiom;
  out["function"] = v.function;
  out["mode"] = to_json(v.mode);
  out["result"] = to_string(v.result);
  if (v.witness) {
    nlohmann::ordered_json w;
    auto profiles = nlohmann::ordered_json::array();
    for (const auto& pi : v.witness->profiles) profiles.push_back(to_json(pi));
    auto vertices = nlohmann::ordered_json::array();
    for (const auto& x : v.witness->vertices) vertices.push_back(x.to_string());
    w["profiles"] = profiles;
    w["vertices"] = vertices;
    w["lhs"] = v.witness->lhs;
    w["rhs"] = v.witness->rhs;
    out["witness"] = w;
  }
  if (const auto* r = std::get_if<Randomized>(&v.mode)) out["seed"] = r->seed;
  out["profiles_checked"] = v.profiles_checked;
  if (!v.details.is_null()) out["details"] = v.details;
  return out;
}

}  // namespace cubecon::lab
