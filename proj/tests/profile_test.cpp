#include <gtest/gtest.h>

#include <random>

#include "cubecon/lab/profile_space.hpp"
#include "cubecon/profile.hpp"

using cubecon::Profile;
using cubecon::Vertex;

namespace {

TEST(Profile, RejectsEmptyAndRagged) {
  EXPECT_THROW(Profile(std::vector<Vertex>{}), std::invalid_argument);
  EXPECT_THROW(Profile::of({"01", "011"}), cubecon::DimensionMismatch);
}

TEST(Profile, Translate) {
  const Profile pi = Profile::of({"110", "011"});
  EXPECT_EQ(cubecon::translate(pi, Vertex::parse("100")), Profile::of({"010", "111"}));
  EXPECT_EQ(cubecon::translate(pi, Vertex::zeros(3)), pi);
  const Vertex x = Vertex::parse("1011");
  EXPECT_EQ(cubecon::translate(Profile{x}, x), Profile{Vertex::zeros(4)});
  EXPECT_THROW(cubecon::translate(pi, Vertex::zeros(2)), cubecon::DimensionMismatch);
}

TEST(Profile, TranslateIsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Profile pi = cubecon::lab::random_profile(rng, 1 + rng() % 90, 1 + rng() % 6);
    const Vertex v = cubecon::lab::random_vertex(rng, pi.dimension());
    EXPECT_EQ(cubecon::translate(cubecon::translate(pi, v), v), pi);
  }
}

TEST(Profile, Concat) {
  const Vertex x = Vertex::parse("10");
  const Vertex y = Vertex::parse("01");
  EXPECT_EQ(cubecon::concat(Profile{x}, Profile{y}), (Profile{x, y}));
  const Profile pi = Profile::of({"110", "101", "011", "000"});
  const auto once = cubecon::column_sums(pi);
  const auto twice = cubecon::column_sums(cubecon::concat(pi, pi));
  EXPECT_EQ(twice.length, 2 * once.length);
  for (std::size_t j = 1; j <= 3; ++j) EXPECT_EQ(twice.sum(j), 2 * once.sum(j));
  EXPECT_THROW(cubecon::concat(Profile::of({"1"}), Profile::of({"10"})), cubecon::DimensionMismatch);
}

TEST(ColumnSums, Examples) {
  const auto zeros = cubecon::column_sums(Profile::of({"000", "000"}));
  EXPECT_EQ(zeros.sums, (std::vector<std::uint64_t>{0, 0, 0}));
  EXPECT_EQ(zeros.length, 2u);
  const auto three = cubecon::column_sums(Profile::of({"110", "101", "011"}));
  EXPECT_EQ(three.sums, (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_EQ(three.length, 3u);
  const auto ones = cubecon::column_sums(Profile{Vertex::ones(100)});
  EXPECT_EQ(ones.sums, std::vector<std::uint64_t>(100, 1));
}

// The sliced counters flush every 255 additions; cross the boundary.
TEST(ColumnSums, MatchesNaiveCountsAcrossFlushes) {
  std::mt19937_64 rng(3);
  for (const std::size_t k : {1u, 254u, 255u, 256u, 511u, 1000u}) {
    const std::size_t n = 1 + rng() % 150;
    const Profile pi = cubecon::lab::random_profile(rng, n, k);
    const auto stats = cubecon::column_sums(pi);
    ASSERT_EQ(stats.sums.size(), n);
    for (std::size_t j = 1; j <= n; ++j) {
      std::uint64_t naive = 0;
      for (const auto& x : pi) naive += x.test(j) ? 1 : 0;
      EXPECT_EQ(stats.sum(j), naive);
      EXPECT_LE(stats.sum(j), k);
    }
  }
}

TEST(ProfileNorm, Examples) {
  EXPECT_EQ(cubecon::profile_norm(Profile{Vertex::zeros(4)}), 0u);
  EXPECT_EQ(cubecon::profile_norm(Profile::of({"110", "100"})), 2u);
}

TEST(Exponent, Validation) {
  EXPECT_THROW(cubecon::Exponent(0.5), std::invalid_argument);
  EXPECT_THROW(cubecon::Exponent(std::nan("")), std::invalid_argument);
  EXPECT_EQ(cubecon::Exponent(3.0).integral(), 3u);
  EXPECT_FALSE(cubecon::Exponent(2.5).integral());
}

}  // namespace
