#pragma once

// Consensus functions on Q_n.
//
// median / anti_median are closed forms: the majority (minority) vertex
// expanded by every subset of the tied coordinates. center and lp_consensus
// scan all 2^n vertices in Gray-code order, keeping a histogram of the k
// distances so each step costs O(k + n).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cubecon/errors.hpp"
#include "cubecon/gray_code.hpp"
#include "cubecon/metrics.hpp"
#include "cubecon/profile.hpp"
#include "cubecon/vertex.hpp"

namespace cubecon {

inline constexpr std::size_t kDefaultTieExpansionGuard = 20;

struct Limits {
  std::size_t max_scan_n = kDefaultScanGuard;
  std::size_t max_tie_expansion = kDefaultTieExpansionGuard;
  unsigned workers = 1;
};

struct ConsensusOutcome {
  VertexSet winners;  // sorted by bitstring
  Score score;
};

// Coordinates where exactly half of the ballots approve.
struct TieSet {
  std::vector<std::size_t> coordinates;  // 1-based, ascending

  std::size_t condorcet_score() const noexcept { return coordinates.size(); }
};

inline Vertex maj(const ColumnStats& stats) {
  Vertex w(stats.dimension);
  for (std::size_t j = 1; j <= stats.dimension; ++j) {
    if (stats.majority(j)) w = w.flipped(j);
  }
  return w;
}

inline Vertex maj(const Profile& pi) { return maj(column_sums(pi)); }

inline Vertex min_vertex(const ColumnStats& stats) {
  Vertex m(stats.dimension);
  for (std::size_t j = 1; j <= stats.dimension; ++j) {
    if (stats.minority(j)) m = m.flipped(j);
  }
  return m;
}

inline Vertex min_vertex(const Profile& pi) { return min_vertex(column_sums(pi)); }

inline TieSet condorcet_ties(const ColumnStats& stats) {
  TieSet ties;
  for (std::size_t j = 1; j <= stats.dimension; ++j) {
    if (stats.tie(j)) ties.coordinates.push_back(j);
  }
  return ties;
}

inline TieSet condorcet_ties(const Profile& pi) { return condorcet_ties(column_sums(pi)); }

namespace detail {

// seed ⊕ Σ_{α∈A} e_α for every A ⊆ ties, A in binary counting order over the
// sorted tie coordinates; returned sorted by bitstring.
inline VertexSet expand_ties(const Vertex& seed, const TieSet& ties, std::size_t guard) {
  const std::size_t cs = ties.condorcet_score();
  if (cs > guard || cs >= 63) {
    throw GuardExceeded("tie expansion of 2^" + std::to_string(cs) +
                            " winners exceeds the guard of " + std::to_string(guard),
                        "--max-tie-expansion");
  }
  std::vector<Vertex::Word> words(seed.words().begin(), seed.words().end());
  VertexSet out;
  out.reserve(std::size_t{1} << cs);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << cs); ++subset) {
    std::vector<Vertex::Word> w = words;
    for (std::size_t b = 0; b < cs; ++b) {
      if ((subset >> b) & 1U) {
        const std::size_t i = ties.coordinates[b] - 1;
        w[i / Vertex::kBitsPerWord] ^= Vertex::Word{1} << (i % Vertex::kBitsPerWord);
      }
    }
    out.push_back(Vertex::from_words(seed.dimension(), w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Med(π) = { Maj(π) ⊕ Σ_{α∈A} e_α : A ⊆ S }, S the tie coordinates.
inline ConsensusOutcome median(const Profile& pi, const Limits& limits = {}) {
  const ColumnStats stats = column_sums(pi);
  const auto k = static_cast<std::int64_t>(stats.length);
  std::int64_t score = 0;
  for (const auto c : stats.sums) {
    score += std::min(static_cast<std::int64_t>(c), k - static_cast<std::int64_t>(c));
  }
  return {detail::expand_ties(maj(stats), condorcet_ties(stats), limits.max_tie_expansion),
          score};
}

// AM(π) = { Min(π) ⊕ Σ_{α∈A} e_α : A ⊆ S }.
inline ConsensusOutcome anti_median(const Profile& pi, const Limits& limits = {}) {
  const ColumnStats stats = column_sums(pi);
  const auto k = static_cast<std::int64_t>(stats.length);
  std::int64_t score = 0;
  for (const auto c : stats.sums) {
    score += std::max(static_cast<std::int64_t>(c), k - static_cast<std::int64_t>(c));
  }
  return {detail::expand_ties(min_vertex(stats), condorcet_ties(stats),
                              limits.max_tie_expansion),
          score};
}

namespace detail {

// Distinct ballots as integer codes with multiplicities.
struct WeightedCodes {
  std::vector<std::uint64_t> codes;
  std::vector<std::uint64_t> weights;
  std::uint64_t total = 0;
};

inline WeightedCodes compress(const Profile& pi) {
  std::vector<std::uint64_t> all;
  all.reserve(pi.size());
  for (const auto& x : pi) all.push_back(x.code());
  std::sort(all.begin(), all.end());
  WeightedCodes out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    out.codes.push_back(all[i]);
    out.weights.push_back(j - i);
    i = j;
  }
  out.total = all.size();
  return out;
}

enum class ScanObjective { eccentricity, exact_power, real_power };

struct SegmentResult {
  std::vector<std::uint64_t> codes;
  std::vector<double> scores;  // parallel to codes; used by the real objective
  std::int64_t best_exact = 0;
  double best_real = 0.0;
  bool any = false;
};

// Scans Gray steps [first, last) keeping every vertex whose score ties the
// minimum (exactly, or within kScoreTolerance for the real objective).
inline SegmentResult scan_segment(std::size_t n, const WeightedCodes& ballots,
                                  ScanObjective objective, const PowerTable& table,
                                  std::uint64_t first, std::uint64_t last) {
  SegmentResult out;
  if (first >= last) return out;
  const std::size_t m = ballots.codes.size();
  std::vector<std::size_t> dist(m);
  std::vector<std::uint64_t> histogram(n + 1, 0);
  std::uint64_t current = gray_code(first);
  for (std::size_t i = 0; i < m; ++i) {
    dist[i] = static_cast<std::size_t>(std::popcount(current ^ ballots.codes[i]));
    histogram[dist[i]] += ballots.weights[i];
  }

  for (std::uint64_t step = first;; ) {
    switch (objective) {
      case ScanObjective::eccentricity: {
        std::size_t d = n;
        while (histogram[d] == 0) --d;
        const auto s = static_cast<std::int64_t>(d);
        if (!out.any || s < out.best_exact) {
          out.best_exact = s;
          out.codes.clear();
        }
        if (s == out.best_exact) out.codes.push_back(current);
        out.any = true;
        break;
      }
      case ScanObjective::exact_power: {
        std::int64_t s = 0;
        for (std::size_t d = 0; d <= n; ++d) {
          s += static_cast<std::int64_t>(histogram[d]) * table.exact_at(d);
        }
        if (!out.any || s < out.best_exact) {
          out.best_exact = s;
          out.codes.clear();
        }
        if (s == out.best_exact) out.codes.push_back(current);
        out.any = true;
        break;
      }
      case ScanObjective::real_power: {
        double s = 0.0;
        for (std::size_t d = 0; d <= n; ++d) {
          s += static_cast<double>(histogram[d]) * table.real_at(d);
        }
        if (!out.any || s < out.best_real - kScoreTolerance) {
          out.best_real = s;
          out.codes.clear();
          out.scores.clear();
        }
        if (s <= out.best_real + kScoreTolerance) {
          out.best_real = std::min(out.best_real, s);
          out.codes.push_back(current);
          out.scores.push_back(s);
        }
        out.any = true;
        break;
      }
    }

    if (++step >= last) break;
    const std::size_t bit = gray_flip(step) - 1;
    current ^= std::uint64_t{1} << bit;
    const std::uint64_t now = (current >> bit) & 1U;
    for (std::size_t i = 0; i < m; ++i) {
      histogram[dist[i]] -= ballots.weights[i];
      if (((ballots.codes[i] >> bit) & 1U) == now) {
        --dist[i];
      } else {
        ++dist[i];
      }
      histogram[dist[i]] += ballots.weights[i];
    }
  }
  return out;
}

inline ConsensusOutcome scan_minimum(const Profile& pi, ScanObjective objective, Exponent p,
                                     const Limits& limits) {
  const std::size_t n = pi.dimension();
  check_scan_guard(n, limits.max_scan_n);
  const WeightedCodes ballots = compress(pi);
  const PowerTable table(n, p, ballots.total);
  if (objective != ScanObjective::eccentricity) {
    objective = table.exact() ? ScanObjective::exact_power : ScanObjective::real_power;
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(limits.workers == 0 ? 1 : limits.workers, 1, total);
  std::vector<SegmentResult> parts(workers);
  auto bounds = [&](std::uint64_t w) { return total / workers * w + std::min(w, total % workers); };
  if (workers == 1) {
    parts[0] = scan_segment(n, ballots, objective, table, 0, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        parts[w] = scan_segment(n, ballots, objective, table, bounds(w), bounds(w + 1));
      });
    }
    for (auto& t : threads) t.join();
  }

  ConsensusOutcome out{{}, std::int64_t{0}};
  std::vector<std::uint64_t> codes;
  if (objective == ScanObjective::real_power) {
    double best = parts[0].best_real;
    for (const auto& part : parts) {
      if (part.any) best = std::min(best, part.best_real);
    }
    for (const auto& part : parts) {
      for (std::size_t i = 0; i < part.codes.size(); ++i) {
        if (part.scores[i] <= best + kScoreTolerance) codes.push_back(part.codes[i]);
      }
    }
    out.score = best;
  } else {
    std::int64_t best = parts[0].best_exact;
    for (const auto& part : parts) {
      if (part.any) best = std::min(best, part.best_exact);
    }
    for (const auto& part : parts) {
      if (part.any && part.best_exact == best) {
        codes.insert(codes.end(), part.codes.begin(), part.codes.end());
      }
    }
    out.score = best;
  }

  out.winners.reserve(codes.size());
  for (const auto c : codes) out.winners.push_back(Vertex::from_code(n, c));
  std::sort(out.winners.begin(), out.winners.end());
  return out;
}

}  // namespace detail

// Cen(π): vertices of minimum eccentricity.
inline ConsensusOutcome center(const Profile& pi, const Limits& limits = {}) {
  return detail::scan_minimum(pi, detail::ScanObjective::eccentricity, Exponent(1.0), limits);
}

// ℓ_p(π): vertices of minimum ℓ_p status.
inline ConsensusOutcome lp_consensus(const Profile& pi, Exponent p, const Limits& limits = {}) {
  return detail::scan_minimum(pi, detail::ScanObjective::exact_power, p, limits);
}

// Mean(π) = ℓ_2(π).
inline ConsensusOutcome mean(const Profile& pi, const Limits& limits = {}) {
  return lp_consensus(pi, Exponent(2.0), limits);
}

}  // namespace cubecon
