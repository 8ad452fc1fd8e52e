#pragma once

// Enumeration and sampling of profiles for the axiom checks.
//
// Exhaustive order: n ascending, then k ascending, then entries
// lexicographically, each entry ranked by its bitstring read as a binary
// number (coordinate 1 most significant).

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cubecon/profile.hpp"
#include "cubecon/vertex.hpp"

namespace cubecon::lab {

struct Exhaustive {
  std::size_t max_n = 3;
  std::size_t max_k = 3;
  std::size_t min_n = 1;
};

struct Randomized {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_n = 6;
  std::size_t max_k = 6;
  std::size_t min_n = 1;
};

using Mode = std::variant<Exhaustive, Randomized>;

// Vertex whose bitstring, read as binary, equals `rank`.
inline Vertex vertex_from_rank(std::size_t n, std::uint64_t rank) {
  std::vector<Vertex::Word> words(Vertex::word_count(n), 0);
  for (std::size_t j = 1; j <= n; ++j) {
    if (n - j < 64 && ((rank >> (n - j)) & 1U)) {
      const std::size_t i = j - 1;
      words[i / Vertex::kBitsPerWord] |= Vertex::Word{1} << (i % Vertex::kBitsPerWord);
    }
  }
  return Vertex::from_words(n, words);
}

inline VertexSet all_vertices(std::size_t n) {
  if (n > 30) throw std::invalid_argument("all_vertices needs n <= 30");
  VertexSet out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) out.push_back(vertex_from_rank(n, r));
  return out;
}

// Σ_{n} Σ_{k} (2^n)^k.
inline std::uint64_t exhaustive_profile_count(const Exhaustive& bounds) {
  std::uint64_t total = 0;
  for (std::size_t n = bounds.min_n; n <= bounds.max_n; ++n) {
    std::uint64_t power = 1;
    for (std::size_t k = 1; k <= bounds.max_k; ++k) {
      power *= std::uint64_t{1} << n;
      total += power;
    }
  }
  return total;
}

// Calls visit(profile) for every k-entry profile over `cube`,
// stopping early when visit returns false. Returns false if stopped.
template <typename Visit>
bool for_each_profile_of(std::size_t k, const VertexSet& cube, Visit&& visit) {
  std::vector<std::size_t> odometer(k, 0);
  for (;;) {
    std::vector<Vertex> entries;
    entries.reserve(k);
    for (const auto r : odometer) entries.push_back(cube[r]);
    if (!visit(Profile(std::move(entries)))) return false;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < cube.size()) break;
      odometer[pos] = 0;
      if (pos == 0) return true;
    }
  }
}

inline Profile random_profile(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> entries;
  entries.reserve(k);
  std::vector<Vertex::Word> words(Vertex::word_count(n));
  for (std::size_t i = 0; i < k; ++i) {
    for (auto& w : words) w = rng();
    entries.push_back(Vertex::from_words(n, words));
  }
  return Profile(std::move(entries));
}

inline Vertex random_vertex(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex::Word> words(Vertex::word_count(n));
  for (auto& w : words) w = rng();
  return Vertex::from_words(n, words);
}

// Uniform in [lo, hi] from raw engine output, so the stream only depends on
// the seed and not on the standard library's distributions.
inline std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline Profile random_profile(std::mt19937_64& rng, const Randomized& mode) {
  const std::size_t n = draw(rng, mode.min_n, mode.max_n);
  const std::size_t k = draw(rng, 1, mode.max_k);
  return random_profile(rng, n, k);
}

// Visits every profile of the mode; returns the number visited.
template <typename Visit>
std::size_t for_each_profile(const Mode& mode, Visit&& visit) {
  std::size_t visited = 0;
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    for (std::size_t n = ex->min_n; n <= ex->max_n; ++n) {
      const VertexSet cube = all_vertices(n);
      for (std::size_t k = 1; k <= ex->max_k; ++k) {
        const bool more = for_each_profile_of(k, cube, [&](const Profile& pi) {
          ++visited;
          return visit(pi);
        });
        if (!more) return visited;
      }
    }
    return visited;
  }
  const auto& rnd = std::get<Randomized>(mode);
  std::mt19937_64 rng(rnd.seed);
  for (std::size_t t = 0; t < rnd.trials; ++t) {
    ++visited;
    if (!visit(random_profile(rng, rnd))) break;
  }
  return visited;
}

// Visits pairs (π1, π2) of equal dimension; returns the number visited.
template <typename Visit>
std::size_t for_each_profile_pair(const Mode& mode, Visit&& visit) {
  std::size_t visited = 0;
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    for (std::size_t n = ex->min_n; n <= ex->max_n; ++n) {
      std::vector<Profile> all;
      for_each_profile(Exhaustive{n, ex->max_k, n}, [&](const Profile& pi) {
        all.push_back(pi);
        return true;
      });
      for (const auto& a : all) {
        for (const auto& b : all) {
          ++visited;
          if (!visit(a, b)) return visited;
        }
      }
    }
    return visited;
  }
  const auto& rnd = std::get<Randomized>(mode);
  std::mt19937_64 rng(rnd.seed);
  for (std::size_t t = 0; t < rnd.trials; ++t) {
    const std::size_t n = draw(rng, rnd.min_n, rnd.max_n);
    const Profile a = random_profile(rng, n, draw(rng, 1, rnd.max_k));
    const Profile b = random_profile(rng, n, draw(rng, 1, rnd.max_k));
    ++visited;
    if (!visit(a, b)) break;
  }
  return visited;
}

}  // namespace cubecon::lab
