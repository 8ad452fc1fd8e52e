#pragma once

// The four remoteness measures of a vertex with respect to a profile.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "cubecon/profile.hpp"
#include "cubecon/vertex.hpp"

namespace cubecon {

// An objective value: exact integer where the arithmetic allows it,
// otherwise a double.
using Score = std::variant<std::int64_t, double>;

inline double to_double(const Score& s) {
  return std::visit([](auto v) { return static_cast<double>(v); }, s);
}

inline bool is_exact(const Score& s) noexcept {
  return std::holds_alternative<std::int64_t>(s);
}

// Absolute tolerance used whenever real-valued scores are compared.
inline constexpr double kScoreTolerance = 1e-9;

// d^p for d = 0..n. Integer entries when p is integral and weight * n^p
// stays below 2^53, so sums remain exact as integers and as doubles.
class PowerTable {
 public:
  PowerTable(std::size_t n, Exponent p, std::uint64_t weight) : p_(p) {
    exact_ = fits_exactly(n, p, weight);
    if (exact_) {
      exact_values_.resize(n + 1);
      const unsigned e = *p.integral();
      for (std::size_t d = 0; d <= n; ++d) {
        std::int64_t acc = 1;
        for (unsigned i = 0; i < e; ++i) acc *= static_cast<std::int64_t>(d);
        exact_values_[d] = acc;
      }
    } else {
      real_values_.resize(n + 1);
      for (std::size_t d = 0; d <= n; ++d) {
        real_values_[d] = d == 0 ? 0.0 : std::pow(static_cast<double>(d), p.value());
      }
    }
  }

  bool exact() const noexcept { return exact_; }
  Exponent exponent() const noexcept { return p_; }
  std::int64_t exact_at(std::size_t d) const { return exact_values_[d]; }
  double real_at(std::size_t d) const { return real_values_[d]; }

 private:
  static bool fits_exactly(std::size_t n, Exponent p, std::uint64_t weight) {
    const auto e = p.integral();
    if (!e || *e > 62) return false;
    constexpr long double kLimit = 9007199254740992.0L;  // 2^53
    long double bound = static_cast<long double>(std::max<std::uint64_t>(weight, 1));
    for (unsigned i = 0; i < *e; ++i) {
      bound *= static_cast<long double>(n);
      if (bound > kLimit) return false;
    }
    return true;
  }

  Exponent p_;
  bool exact_ = false;
  std::vector<std::int64_t> exact_values_;
  std::vector<double> real_values_;
};

// e(x, π) = max_i d(x, x_i).
inline std::size_t eccentricity(const Vertex& x, const Profile& pi) {
  require_same_dimension(pi, x);
  std::size_t best = 0;
  for (const auto& y : pi) best = std::max(best, hamming(x, y));
  return best;
}

// S_π(x) = Σ_i d(x, x_i).
inline std::int64_t status(const Vertex& x, const Profile& pi) {
  require_same_dimension(pi, x);
  std::int64_t total = 0;
  for (const auto& y : pi) total += static_cast<std::int64_t>(hamming(x, y));
  return total;
}

// ℓ_pS_π(x) = Σ_i d(x, x_i)^p, exact when the power table is.
inline Score lp_score(const Vertex& x, const Profile& pi, Exponent p) {
  require_same_dimension(pi, x);
  const PowerTable table(pi.dimension(), p, pi.size());
  // Accumulate by distance so equal distance multisets give identical sums.
  std::vector<std::uint64_t> histogram(pi.dimension() + 1, 0);
  for (const auto& y : pi) ++histogram[hamming(x, y)];
  if (table.exact()) {
    std::int64_t total = 0;
    for (std::size_t d = 0; d < histogram.size(); ++d) {
      total += static_cast<std::int64_t>(histogram[d]) * table.exact_at(d);
    }
    return total;
  }
  double total = 0.0;
  for (std::size_t d = 0; d < histogram.size(); ++d) {
    total += static_cast<double>(histogram[d]) * table.real_at(d);
  }
  return total;
}

inline double lp_status(const Vertex& x, const Profile& pi, Exponent p) {
  return to_double(lp_score(x, pi, p));
}

// SS_π(x) = Σ_i d(x, x_i)^2.
inline std::int64_t square_status(const Vertex& x, const Profile& pi) {
  require_same_dimension(pi, x);
  std::int64_t total = 0;
  for (const auto& y : pi) {
    const auto d = static_cast<std::int64_t>(hamming(x, y));
    total += d * d;
  }
  return total;
}

// Char_p(π) = Σ_{i=1..k} ‖x_i‖^p, the ℓ_p status of the origin.
inline Score char_p_score(const Profile& pi, Exponent p) {
  return lp_score(Vertex::zeros(pi.dimension()), pi, p);
}

inline double char_p(const Profile& pi, Exponent p) {
  return to_double(char_p_score(pi, p));
}

}  // namespace cubecon
