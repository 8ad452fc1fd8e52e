#pragma once

// Reflected Gray-code enumeration of Q_n.
//
// Step i visits gray(i) = i ^ (i >> 1); going from step i-1 to step i flips
// the coordinate at bit position countr_zero(i). Bit 0 is coordinate 1, so
// the walk for n = 2 is 00, 10, 11, 01.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>

#include "cubecon/errors.hpp"
#include "cubecon/vertex.hpp"

namespace cubecon {

inline constexpr std::size_t kDefaultScanGuard = 25;
// Codes are 64-bit and the scan counts steps in a uint64.
inline constexpr std::size_t kHardScanLimit = 62;

inline constexpr std::uint64_t gray_code(std::uint64_t step) noexcept {
  return step ^ (step >> 1);
}

// 1-based coordinate flipped when moving from step-1 to step (step >= 1).
inline constexpr std::size_t gray_flip(std::uint64_t step) noexcept {
  return static_cast<std::size_t>(std::countr_zero(step)) + 1;
}

inline void check_scan_guard(std::size_t n, std::size_t guard) {
  if (n > guard || n > kHardScanLimit) {
    throw GuardExceeded("a scan over 2^" + std::to_string(n) +
                            " vertices exceeds the guard of n <= " +
                            std::to_string(guard),
                        "--max-scan-n");
  }
}

struct GrayStep {
  Vertex vertex;
  std::size_t flipped;  // 1-based coordinate changed from the previous step; 0 on the first
};

class GrayCodeSequence {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GrayStep;
    using difference_type = std::ptrdiff_t;
    using pointer = const GrayStep*;
    using reference = const GrayStep&;

    iterator(std::size_t n, std::uint64_t step)
        : step_(step), current_{Vertex::zeros(n), 0} {}

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }

    iterator& operator++() {
      ++step_;
      const std::size_t j = gray_flip(step_);
      if (j <= current_.vertex.dimension()) {
        current_.vertex = current_.vertex.flipped(j);
        current_.flipped = j;
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.step_ == b.step_;
    }

   private:
    std::uint64_t step_;
    GrayStep current_;
  };

  explicit GrayCodeSequence(std::size_t n, std::size_t guard = kDefaultScanGuard)
      : n_(n) {
    check_scan_guard(n, guard);
    (void)Vertex::zeros(n);  // validates n >= 1
  }

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, size()); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

 private:
  std::size_t n_;
};

inline GrayCodeSequence enumerate_vertices(std::size_t n,
                                           std::size_t guard = kDefaultScanGuard) {
  return GrayCodeSequence(n, guard);
}

}  // namespace cubecon
