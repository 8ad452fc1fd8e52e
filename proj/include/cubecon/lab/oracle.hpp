#pragma once

// Brute-force ground truth: evaluates the objective at every vertex of Q_n
// in plain counting order, with distances computed coordinate by coordinate.
// Shares nothing with the Gray-code scan or the popcount distance on purpose.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubecon/consensus.hpp"
#include "cubecon/gray_code.hpp"
#include "cubecon/lab/profile_space.hpp"
#include "cubecon/profile.hpp"

namespace cubecon::lab {

enum class Objective { eccentricity, status, lp_status };
enum class Sense { minimize, maximize };

namespace detail {

inline std::size_t naive_distance(const Vertex& a, const Vertex& b) {
  std::size_t d = 0;
  for (std::size_t j = 1; j <= a.dimension(); ++j) d += a.test(j) != b.test(j) ? 1 : 0;
  return d;
}

// d^p as an exact integer, or nullopt if p is not integral or it overflows.
inline std::optional<std::int64_t> exact_power(std::size_t d, Exponent p) {
  const auto e = p.integral();
  if (!e) return std::nullopt;
  std::int64_t acc = 1;
  for (unsigned i = 0; i < *e; ++i) {
    if (d != 0 && acc > (std::int64_t{1} << 52) / static_cast<std::int64_t>(d)) return std::nullopt;
    acc *= static_cast<std::int64_t>(d);
  }
  return acc;
}

}  // namespace detail

inline ConsensusOutcome oracle_argopt(const Profile& pi, Objective objective, Sense sense,
                                      Exponent p = Exponent(1.0),
                                      std::size_t guard = kDefaultScanGuard) {
  const std::size_t n = pi.dimension();
  check_scan_guard(n, guard);
  const std::uint64_t total = std::uint64_t{1} << n;

  // Exact integers unless a non-integral or overflowing power forces reals.
  bool exact = objective != Objective::lp_status || p.integral().has_value();
  std::vector<std::int64_t> exact_scores;
  std::vector<double> real_scores;
  exact_scores.reserve(exact ? total : 0);
  real_scores.reserve(total);

  for (std::uint64_t r = 0; r < total; ++r) {
    const Vertex x = vertex_from_rank(n, r);
    std::int64_t ex = 0;
    double re = 0.0;
    for (const auto& y : pi) {
      const std::size_t d = detail::naive_distance(x, y);
      switch (objective) {
        case Objective::eccentricity:
          ex = std::max<std::int64_t>(ex, static_cast<std::int64_t>(d));
          break;
        case Objective::status:
          ex += static_cast<std::int64_t>(d);
          break;
        case Objective::lp_status: {
          const auto power = detail::exact_power(d, p);
          if (!power) exact = false;
          if (power) ex += *power;
          re += d == 0 ? 0.0 : std::pow(static_cast<double>(d), p.value());
          break;
        }
      }
    }
    if (objective != Objective::lp_status) re = static_cast<double>(ex);
    exact_scores.push_back(ex);
    real_scores.push_back(re);
  }

  ConsensusOutcome out{{}, std::int64_t{0}};
  const bool maximize = sense == Sense::maximize;
  if (exact) {
    std::int64_t best = exact_scores[0];
    for (const auto s : exact_scores) best = maximize ? std::max(best, s) : std::min(best, s);
    for (std::uint64_t r = 0; r < total; ++r) {
      if (exact_scores[r] == best) out.winners.push_back(vertex_from_rank(n, r));
    }
    out.score = best;
  } else {
    double best = real_scores[0];
    for (const auto s : real_scores) best = maximize ? std::max(best, s) : std::min(best, s);
    for (std::uint64_t r = 0; r < total; ++r) {
      if (std::abs(real_scores[r] - best) <= kScoreTolerance) {
        out.winners.push_back(vertex_from_rank(n, r));
      }
    }
    out.score = best;
  }
  return out;  // ranks ascend, so winners are already in bitstring order
}

}  // namespace cubecon::lab
