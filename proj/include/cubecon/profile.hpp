#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubecon/errors.hpp"
#include "cubecon/vertex.hpp"

namespace cubecon {

// An ordered, non-empty sequence of vertices of one dimension. Repetitions
// are allowed and order is kept.
class Profile {
 public:
  explicit Profile(std::vector<Vertex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("profile must be non-empty");
    const std::size_t n = entries_.front().dimension();
    for (const auto& v : entries_) {
      if (v.dimension() != n) throw DimensionMismatch(n, v.dimension());
    }
  }

  Profile(std::initializer_list<Vertex> entries)
      : Profile(std::vector<Vertex>(entries)) {}

  // Convenience for fixtures: Profile::of({"110", "101"}).
  static Profile of(std::initializer_list<std::string_view> bitstrings) {
    std::vector<Vertex> entries;
    entries.reserve(bitstrings.size());
    for (auto s : bitstrings) entries.push_back(Vertex::parse(s));
    return Profile(std::move(entries));
  }

  std::size_t dimension() const noexcept { return entries_.front().dimension(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const Vertex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Vertex> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<Vertex> entries_;
};

inline void require_same_dimension(const Profile& pi, const Vertex& v) {
  if (pi.dimension() != v.dimension()) throw DimensionMismatch(pi.dimension(), v.dimension());
}

// π ⊕ v = (x_1 ⊕ v, ..., x_k ⊕ v).
inline Profile translate(const Profile& pi, const Vertex& v) {
  require_same_dimension(pi, v);
  std::vector<Vertex> out;
  out.reserve(pi.size());
  for (const auto& x : pi) out.push_back(x ^ v);
  return Profile(std::move(out));
}

// π1π2: entries of π1 followed by entries of π2.
inline Profile concat(const Profile& first, const Profile& second) {
  if (first.dimension() != second.dimension()) {
    throw DimensionMismatch(first.dimension(), second.dimension());
  }
  std::vector<Vertex> out(first.begin(), first.end());
  out.insert(out.end(), second.begin(), second.end());
  return Profile(std::move(out));
}

// Per-coordinate count of ones across a profile, c_i = Σ_j x_i^j.
struct ColumnStats {
  std::size_t dimension = 0;
  std::size_t length = 0;                 // k
  std::vector<std::uint64_t> sums;        // sums[i-1] = c_i

  std::uint64_t sum(std::size_t j) const { return sums.at(j - 1); }

  // Comparisons against k/2 without leaving the integers.
  bool majority(std::size_t j) const { return 2 * sum(j) > length; }
  bool minority(std::size_t j) const { return 2 * sum(j) < length; }
  bool tie(std::size_t j) const { return 2 * sum(j) == length; }
};

namespace detail {

// Vertical (bit-sliced) counters for one word of coordinates: plane b holds
// bit b of 64 independent counters. Up to 2^kPlanes - 1 additions fit before
// a flush into the wide sums.
class SlicedCounter {
 public:
  static constexpr std::size_t kPlanes = 8;
  static constexpr std::size_t kCapacity = (std::size_t{1} << kPlanes) - 1;

  void add(std::uint64_t word) noexcept {
    std::uint64_t carry = word;
    for (std::size_t b = 0; b < kPlanes && carry != 0; ++b) {
      const std::uint64_t next = planes_[b] & carry;
      planes_[b] ^= carry;
      carry = next;
    }
  }

  void flush_into(std::span<std::uint64_t> sums) noexcept {
    for (std::size_t b = 0; b < kPlanes; ++b) {
      std::uint64_t plane = planes_[b];
      while (plane != 0) {
        const int bit = std::countr_zero(plane);
        if (static_cast<std::size_t>(bit) < sums.size()) sums[bit] += std::uint64_t{1} << b;
        plane &= plane - 1;
      }
      planes_[b] = 0;
    }
  }

 private:
  std::array<std::uint64_t, kPlanes> planes_{};
};

}  // namespace detail

inline ColumnStats column_sums(const Profile& pi) {
  const std::size_t n = pi.dimension();
  const std::size_t words = Vertex::word_count(n);
  ColumnStats stats{n, pi.size(), std::vector<std::uint64_t>(n, 0)};
  std::vector<detail::SlicedCounter> counters(words);

  std::size_t pending = 0;
  auto flush = [&] {
    for (std::size_t w = 0; w < words; ++w) {
      const std::size_t lo = w * Vertex::kBitsPerWord;
      const std::size_t len = std::min(Vertex::kBitsPerWord, n - lo);
      counters[w].flush_into(std::span<std::uint64_t>(stats.sums).subspan(lo, len));
    }
    pending = 0;
  };

  for (const auto& x : pi) {
    const auto ws = x.words();
    for (std::size_t w = 0; w < words; ++w) counters[w].add(ws[w]);
    if (++pending == detail::SlicedCounter::kCapacity) flush();
  }
  flush();
  return stats;
}

// ‖π‖ = max_i ‖x_i‖.
inline std::size_t profile_norm(const Profile& pi) {
  std::size_t best = 0;
  for (const auto& x : pi) best = std::max(best, norm(x));
  return best;
}

// The exponent p of an ℓ_p objective; p >= 1 and finite.
class Exponent {
 public:
  constexpr Exponent() = default;
  explicit Exponent(double p) : value_(p) {
    if (!std::isfinite(p) || p < 1.0) {
      throw std::invalid_argument("exponent p must be finite and >= 1");
    }
  }

  double value() const noexcept { return value_; }

  std::optional<unsigned> integral() const noexcept {
    if (value_ == std::floor(value_) && value_ <= 1024.0) {
      return static_cast<unsigned>(value_);
    }
    return std::nullopt;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  double value_ = 1.0;
};

}  // namespace cubecon
