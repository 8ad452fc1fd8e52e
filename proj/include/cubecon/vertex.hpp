#pragma once

// Vertices of the n-cube Q_n, stored as packed 64-bit words.
//
// Coordinate j (1-based, as in all public interfaces) lives in bit (j-1) % 64
// of word (j-1) / 64. Bits above the dimension are always zero, so equality,
// popcount and xor can work on whole words.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubecon/errors.hpp"

#ifndef CUBECON_MAX_DIMENSION
#define CUBECON_MAX_DIMENSION 1024
#endif

namespace cubecon {

class Vertex {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kBitsPerWord = 64;
  static constexpr std::size_t kMaxDimension = CUBECON_MAX_DIMENSION;

  // The origin **0** of Q_n.
  explicit Vertex(std::size_t dimension)
      : dimension_(checked_dimension(dimension)),
        words_(word_count(dimension), Word{0}) {}

  static Vertex zeros(std::size_t dimension) { return Vertex(dimension); }

  static Vertex ones(std::size_t dimension) {
    Vertex v(dimension);
    std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
    v.canonicalize();
    return v;
  }

  // Low `dimension` bits of `code`; bit 0 is coordinate 1. Requires n <= 64.
  static Vertex from_code(std::size_t dimension, std::uint64_t code) {
    if (dimension > kBitsPerWord) {
      throw std::invalid_argument("from_code needs dimension <= 64");
    }
    Vertex v(dimension);
    v.words_[0] = code;
    v.canonicalize();
    return v;
  }

  static Vertex from_words(std::size_t dimension, std::span<const Word> words) {
    Vertex v(dimension);
    if (words.size() != v.words_.size()) {
      throw std::invalid_argument("word count does not match dimension");
    }
    std::copy(words.begin(), words.end(), v.words_.begin());
    v.canonicalize();
    return v;
  }

  // Parses the text form: n characters '0'/'1', coordinate 1 leftmost.
  static Vertex parse(std::string_view text) {
    if (text.empty()) throw ValidationError("empty bitstring");
    if (text.size() > kMaxDimension) {
      throw ValidationError("bitstring longer than maximum dimension " +
                            std::to_string(kMaxDimension));
    }
    Vertex v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '1') {
        v.words_[i / kBitsPerWord] |= Word{1} << (i % kBitsPerWord);
      } else if (c != '0') {
        throw ValidationError(std::string("illegal character '") + c + "'", 0,
                              i + 1);
      }
    }
    return v;
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const Word> words() const noexcept { return words_; }

  // Coordinate j, 1-based.
  bool test(std::size_t j) const {
    check_coordinate(j);
    const std::size_t i = j - 1;
    return (words_[i / kBitsPerWord] >> (i % kBitsPerWord)) & 1U;
  }

  Vertex flipped(std::size_t j) const {
    check_coordinate(j);
    Vertex v = *this;
    const std::size_t i = j - 1;
    v.words_[i / kBitsPerWord] ^= Word{1} << (i % kBitsPerWord);
    return v;
  }

  // First word as an integer code; requires n <= 64.
  std::uint64_t code() const {
    if (dimension_ > kBitsPerWord) {
      throw std::invalid_argument("code() needs dimension <= 64");
    }
    return words_[0];
  }

  std::string to_string() const {
    std::string out(dimension_, '0');
    for (std::size_t i = 0; i < dimension_; ++i) {
      if ((words_[i / kBitsPerWord] >> (i % kBitsPerWord)) & 1U) out[i] = '1';
    }
    return out;
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;

  // Dimension first, then lexicographic order of the text form.
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (a.dimension_ != b.dimension_) return a.dimension_ <=> b.dimension_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const Word diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const Word lowest = diff & (~diff + 1);
        return (a.words_[w] & lowest) ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vertex& v) {
    return os << v.to_string();
  }

  static std::size_t word_count(std::size_t dimension) noexcept {
    return (dimension + kBitsPerWord - 1) / kBitsPerWord;
  }

 private:
  friend Vertex operator^(const Vertex& u, const Vertex& v);
  friend Vertex complement(const Vertex& u);

  static std::size_t checked_dimension(std::size_t dimension) {
    if (dimension < 1 || dimension > kMaxDimension) {
      throw std::invalid_argument("dimension must lie in [1, " +
                                  std::to_string(kMaxDimension) + "], got " +
                                  std::to_string(dimension));
    }
    return dimension;
  }

  void check_coordinate(std::size_t j) const {
    if (j < 1 || j > dimension_) {
      throw std::out_of_range("coordinate " + std::to_string(j) +
                              " outside [1, " + std::to_string(dimension_) +
                              "]");
    }
  }

  void canonicalize() noexcept {
    const std::size_t tail = dimension_ % kBitsPerWord;
    if (tail != 0) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t dimension_;
  std::vector<Word> words_;
};

using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

inline void require_same_dimension(const Vertex& u, const Vertex& v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionMismatch(u.dimension(), v.dimension());
  }
}

inline Vertex operator^(const Vertex& u, const Vertex& v) {
  require_same_dimension(u, v);
  Vertex out = u;
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] ^= v.words_[w];
  return out;
}

inline Vertex xor_vertices(const Vertex& u, const Vertex& v) { return u ^ v; }

inline Vertex complement(const Vertex& u) {
  Vertex out = u;
  for (auto& w : out.words_) w = ~w;
  out.canonicalize();
  return out;
}

inline std::size_t hamming(const Vertex& u, const Vertex& v) {
  require_same_dimension(u, v);
  const auto a = u.words();
  const auto b = v.words();
  std::size_t d = 0;
  for (std::size_t w = 0; w < a.size(); ++w) d += std::popcount(a[w] ^ b[w]);
  return d;
}

// ‖u‖ = d(0, u).
inline std::size_t norm(const Vertex& u) noexcept {
  std::size_t d = 0;
  for (const auto w : u.words()) d += std::popcount(w);
  return d;
}

// e_j: zero everywhere except coordinate j (1-based).
inline Vertex unit_vertex(std::size_t dimension, std::size_t j) {
  return Vertex::zeros(dimension).flipped(j);
}

// u <= v coordinatewise, i.e. ones(u) is a subset of ones(v).
inline bool leq(const Vertex& u, const Vertex& v) {
  require_same_dimension(u, v);
  const auto a = u.words();
  const auto b = v.words();
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

inline VertexSet canonical_set(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool contains(const VertexSet& sorted, const Vertex& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline VertexSet translate_set(const VertexSet& vs, const Vertex& v) {
  VertexSet out;
  out.reserve(vs.size());
  for (const auto& u : vs) out.push_back(u ^ v);
  return canonical_set(std::move(out));
}

}  // namespace cubecon
