#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cubecon/lab/profile_space.hpp"
#include "cubecon/metrics.hpp"

using cubecon::Exponent;
using cubecon::Profile;
using cubecon::Vertex;

namespace {

// Independent reference values, coordinate by coordinate.
std::size_t slow_distance(const Vertex& a, const Vertex& b) {
  std::size_t d = 0;
  for (std::size_t j = 1; j <= a.dimension(); ++j) d += a.test(j) != b.test(j);
  return d;
}

double slow_lp(const Vertex& x, const Profile& pi, double p) {
  double total = 0;
  for (const auto& y : pi) {
    const auto d = slow_distance(x, y);
    total += d == 0 ? 0.0 : std::pow(static_cast<double>(d), p);
  }
  return total;
}

TEST(Eccentricity, Examples) {
  const Vertex x = Vertex::parse("0110");
  EXPECT_EQ(cubecon::eccentricity(x, Profile{x}), 0u);
  EXPECT_EQ(cubecon::eccentricity(Vertex::zeros(3), Profile::of({"000", "111"})), 3u);
  EXPECT_THROW(cubecon::eccentricity(Vertex::zeros(2), Profile::of({"000"})),
               cubecon::DimensionMismatch);
}

TEST(Status, Examples) {
  const Vertex x = Vertex::parse("0110");
  EXPECT_EQ(cubecon::status(x, Profile{x}), 0);
  EXPECT_EQ(cubecon::status(Vertex::parse("111"), Profile::of({"110", "101", "011"})), 3);
}

TEST(Status, DecomposesByColumns) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Profile pi = cubecon::lab::random_profile(rng, 1 + rng() % 40, 1 + rng() % 9);
    const Vertex x = cubecon::lab::random_vertex(rng, pi.dimension());
    const auto stats = cubecon::column_sums(pi);
    std::int64_t by_column = 0;
    for (std::size_t j = 1; j <= pi.dimension(); ++j) {
      const auto c = static_cast<std::int64_t>(stats.sum(j));
      by_column += x.test(j) ? static_cast<std::int64_t>(pi.size()) - c : c;
    }
    EXPECT_EQ(cubecon::status(x, pi), by_column);
  }
}

TEST(LpStatus, Examples) {
  const Vertex x = Vertex::parse("101");
  for (const double p : {1.0, 2.0, 2.5, 7.0}) EXPECT_EQ(cubecon::lp_status(x, Profile{x}, Exponent(p)), 0.0);
  EXPECT_EQ(cubecon::lp_status(Vertex::zeros(3), Profile::of({"110", "001"}), Exponent(2.0)), 5.0);
  EXPECT_TRUE(cubecon::is_exact(cubecon::lp_score(x, Profile{x}, Exponent(3.0))));
  EXPECT_FALSE(cubecon::is_exact(cubecon::lp_score(x, Profile{x}, Exponent(2.5))));
}

TEST(LpStatus, AgreesWithReferenceAndSpecialCases) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const Profile pi = cubecon::lab::random_profile(rng, 1 + rng() % 20, 1 + rng() % 9);
    const Vertex x = cubecon::lab::random_vertex(rng, pi.dimension());
    EXPECT_EQ(cubecon::lp_status(x, pi, Exponent(1.0)), static_cast<double>(cubecon::status(x, pi)));
    EXPECT_EQ(cubecon::lp_status(x, pi, Exponent(2.0)),
              static_cast<double>(cubecon::square_status(x, pi)));
    for (const double p : {1.5, 2.5, 3.0}) {
      EXPECT_NEAR(cubecon::lp_status(x, pi, Exponent(p)), slow_lp(x, pi, p), 1e-9);
    }
  }
}

TEST(LpStatus, NondecreasingInPWhenDistancesArePositive) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Profile pi = cubecon::lab::random_profile(rng, 2 + rng() % 10, 1 + rng() % 6);
    const Vertex x = cubecon::lab::random_vertex(rng, pi.dimension());
    bool positive = true;
    for (const auto& y : pi) positive = positive && cubecon::hamming(x, y) >= 1;
    if (!positive) continue;
    double previous = 0;
    for (const double p : {1.0, 1.25, 2.0, 2.5, 3.0, 4.0}) {
      const double value = cubecon::lp_status(x, pi, Exponent(p));
      EXPECT_GE(value, previous - 1e-9);
      previous = value;
    }
  }
}

TEST(CharP, Examples) {
  EXPECT_EQ(cubecon::char_p(Profile::of({"000", "000"}), Exponent(2.0)), 0.0);
  EXPECT_EQ(cubecon::char_p(Profile::of({"110", "101", "011"}), Exponent(2.0)), 12.0);
}

TEST(CharP, BridgesToLpStatus) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Profile pi = cubecon::lab::random_profile(rng, 1 + rng() % 12, 1 + rng() % 7);
    const Vertex v = cubecon::lab::random_vertex(rng, pi.dimension());
    for (const double p : {1.0, 2.0, 2.5}) {
      const Exponent e(p);
      EXPECT_DOUBLE_EQ(cubecon::char_p(pi, e), cubecon::lp_status(Vertex::zeros(pi.dimension()), pi, e));
      EXPECT_NEAR(cubecon::char_p(cubecon::translate(pi, v), e), cubecon::lp_status(v, pi, e), 1e-9);
    }
  }
}

// Exhaustive over n <= 3, k <= 3: every measure is translation invariant and
// behaves additively (or by max) under concatenation.
TEST(MetricProperties, TranslationAndConcatenation) {
  cubecon::lab::for_each_profile(cubecon::lab::Exhaustive{3, 3, 1}, [](const Profile& pi) {
    const auto cube = cubecon::lab::all_vertices(pi.dimension());
    const Profile tail = Profile{cube.back()};
    const Profile joined = cubecon::concat(pi, tail);
    EXPECT_EQ(cubecon::profile_norm(pi), cubecon::eccentricity(Vertex::zeros(pi.dimension()), pi));
    for (const auto& x : cube) {
      EXPECT_EQ(cubecon::status(x, joined), cubecon::status(x, pi) + cubecon::status(x, tail));
      EXPECT_EQ(cubecon::eccentricity(x, joined),
                std::max(cubecon::eccentricity(x, pi), cubecon::eccentricity(x, tail)));
      EXPECT_DOUBLE_EQ(cubecon::lp_status(x, joined, Exponent(3.0)),
                       cubecon::lp_status(x, pi, Exponent(3.0)) +
                           cubecon::lp_status(x, tail, Exponent(3.0)));
      for (const auto& z : cube) {
        const Profile moved = cubecon::translate(pi, z);
        EXPECT_EQ(cubecon::eccentricity(x ^ z, moved), cubecon::eccentricity(x, pi));
        EXPECT_EQ(cubecon::status(x ^ z, moved), cubecon::status(x, pi));
        EXPECT_NEAR(cubecon::lp_status(x ^ z, moved, Exponent(2.5)),
                    cubecon::lp_status(x, pi, Exponent(2.5)), 1e-9);
      }
    }
    return true;
  });
}

}  // namespace
