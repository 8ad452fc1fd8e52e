#include <gtest/gtest.h>

#include "cubecon/lab/axioms.hpp"

using cubecon::Exponent;
using cubecon::Profile;
using cubecon::Vertex;
using cubecon::VertexSet;
using namespace cubecon::lab;

namespace {

const Mode kSmall = Exhaustive{3, 3, 1};

ConsensusFunction constant_origin() {
  return constant_function("const-0", [](std::size_t n) { return VertexSet{Vertex::zeros(n)}; });
}

TEST(Builtins, ExampleFunctions) {
  const Vertex x = Vertex::parse("10");
  const Vertex y = Vertex::parse("01");
  const Vertex z = Vertex::parse("11");
  EXPECT_EQ(f1_function()(Profile{x, y, z}), VertexSet{x});
  EXPECT_EQ(f2_function()(Profile{x}).size(), 4u);
  EXPECT_EQ(f3_function()(Profile{x, y, x}), cubecon::canonical_set({x, y}));
}

TEST(Builtins, EmptyOutputIsAnInvariantBreach) {
  const ConsensusFunction broken{"broken", [](const Profile&) { return VertexSet{}; }};
  EXPECT_THROW(broken(Profile::of({"1"})), cubecon::InvariantBreach);
  const ConsensusFunction wrong_dim{"wrong", [](const Profile&) { return VertexSet{Vertex::zeros(5)}; }};
  EXPECT_THROW(wrong_dim(Profile::of({"1"})), cubecon::InvariantBreach);
}

TEST(Builtins, UserScoreViaOracle) {
  const auto f = from_score(
      "user-status", [](const Vertex& x, const Profile& pi) { return double(cubecon::status(x, pi)); },
      Sense::minimize);
  const Profile pi = Profile::of({"110", "101", "011"});
  EXPECT_EQ(f(pi), cubecon::median(pi).winners);
  EXPECT_EQ(check_translation(f, Exhaustive{2, 2, 1}).result, Result::holds);
}

TEST(Translation, HoldsForTheLocationFunctions) {
  for (const auto& f : {med_function(), cen_function(), lp_function(Exponent(2.0)), am_function(),
                        f1_function(), f2_function(), f3_function()}) {
    const auto v = check_translation(f, kSmall);
    EXPECT_EQ(v.result, Result::holds) << f.name();
    EXPECT_EQ(v.profiles_checked, 682u);
  }
}

TEST(Translation, ConstantOriginFailsWithReplayableWitness) {
  const auto f = constant_origin();
  const auto v = check_translation(f, kSmall);
  ASSERT_EQ(v.result, Result::fails);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(replays(v, f));
  // The textbook witness π = (1), v = 1 is a violation as well.
  AxiomVerdict textbook = v;
  textbook.witness = Witness{{Profile::of({"1"})}, {Vertex::parse("0"), Vertex::parse("1")}, "", ""};
  EXPECT_TRUE(replays(textbook, f));
}

TEST(Translation, RandomizedModeIsLabeledHonestly) {
  const auto v = check_translation(med_function(), Randomized{100, 42, 10, 7, 1});
  EXPECT_EQ(v.result, Result::holds_within_trials);
  EXPECT_EQ(to_json(v)["seed"], 42);
}

// Among all constant functions on Q_n only the whole vertex set satisfies (T).
TEST(Translation, OnlyTheFullConstantFunctionIsTranslationInvariant) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const VertexSet cube = all_vertices(n);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cube.size()); ++mask) {
      VertexSet out;
      for (std::size_t i = 0; i < cube.size(); ++i) {
        if ((mask >> i) & 1U) out.push_back(cube[i]);
      }
      const auto f = constant_function("const", [out, n](std::size_t m) {
        return m == n ? out : all_vertices(m);
      });
      const auto v = check_translation(f, Exhaustive{n, 2, n});
      EXPECT_EQ(v.holds(), out.size() == cube.size()) << "n=" << n << " mask=" << mask;
    }
  }
  std::mt19937_64 rng(8);
  const VertexSet cube = all_vertices(3);
  for (int t = 0; t < 40; ++t) {
    const std::uint64_t mask = 1 + rng() % 254;  // never the full set
    VertexSet out;
    for (std::size_t i = 0; i < cube.size(); ++i) {
      if ((mask >> i) & 1U) out.push_back(cube[i]);
    }
    const auto f = constant_function("const", [out](std::size_t) { return out; });
    const auto v = check_translation(f, Exhaustive{3, 1, 3});
    EXPECT_EQ(v.result, Result::fails);
    EXPECT_TRUE(replays(v, f));
  }
}

TEST(Agreement, Examples) {
  EXPECT_EQ(check_agreement(med_function(), med_function(), origin_anchor(), kSmall).result,
            Result::holds);
  EXPECT_EQ(check_agreement(med_function(), oracle_function(Objective::status, Sense::minimize),
                            origin_anchor(), kSmall)
                .result,
            Result::holds);

  const auto f1 = f1_function();
  const auto f3 = f3_function();
  const auto v = check_agreement(f1, f3, origin_anchor(), Exhaustive{1, 3, 1});
  ASSERT_EQ(v.result, Result::fails);
  EXPECT_EQ(v.witness->profiles.at(0), Profile::of({"1", "0"}));
  EXPECT_TRUE(replays(v, f1, &f3));
}

TEST(Agreement, FixedAnchorOnlyAppliesInItsDimension) {
  const auto v = check_agreement(f1_function(), f3_function(), fixed_anchor(Vertex::parse("00")),
                                 Exhaustive{1, 1, 1});
  EXPECT_EQ(v.result, Result::holds);
}

TEST(TranslationAgreement, EqualityForCorrectImplementations) {
  const auto med = verify_theorem1(med_function(), oracle_function(Objective::status, Sense::minimize),
                                   origin_anchor(), Exhaustive{3, 3, 1});
  EXPECT_EQ(med.result, Result::holds);
  EXPECT_EQ(med.profiles_checked, 682u);

  const auto cen = verify_theorem1(cen_function(), cen_function(), origin_anchor(), Exhaustive{2, 2, 1});
  EXPECT_EQ(cen.result, Result::holds);

  const auto lp = verify_theorem1(
      lp_function(Exponent(2.0)),
      oracle_function(Objective::lp_status, Sense::minimize, Exponent(2.0)), ones_anchor(),
      Exhaustive{3, 3, 1});
  EXPECT_EQ(lp.result, Result::holds);
}

TEST(TranslationAgreement, InapplicableWithoutTranslation) {
  const auto v = verify_theorem1(constant_origin(), med_function(), origin_anchor(), Exhaustive{2, 2, 1});
  EXPECT_EQ(v.result, Result::inapplicable);
}

// A shifted median still satisfies (T), so the bug surfaces as a failed
// agreement at the origin and the comparison is never claimed to hold.
TEST(TranslationAgreement, BuggyImplementationIsCaught) {
  const ConsensusFunction buggy{"buggy-med", [](const Profile& pi) {
                                  auto out = cubecon::median(pi).winners;
                                  if (pi.size() == 3 && pi.dimension() == 2) {
                                    out = cubecon::translate_set(out, cubecon::unit_vertex(2, 1));
                                  }
                                  return out;
                                }};
  const auto oracle = oracle_function(Objective::status, Sense::minimize);
  const auto v = verify_theorem1(buggy, oracle, origin_anchor(), Exhaustive{2, 3, 1});
  EXPECT_EQ(v.result, Result::inapplicable);
  EXPECT_EQ(v.details["agreement"], "fails");
}

TEST(Consistency, Examples) {
  EXPECT_EQ(check_consistency(f2_function(), Exhaustive{2, 2, 1}).result, Result::holds);
  EXPECT_EQ(check_consistency(med_function(), Exhaustive{2, 2, 1}).result, Result::holds);

  const auto cen = cen_function();
  const auto v = check_consistency(cen, Exhaustive{2, 2, 1});
  ASSERT_EQ(v.result, Result::fails);
  EXPECT_EQ(v.witness->profiles.at(0), Profile::of({"0"}));
  EXPECT_EQ(v.witness->profiles.at(1), Profile::of({"0", "1"}));
  EXPECT_TRUE(replays(v, cen));
}

TEST(MajMinRR, Examples) {
  EXPECT_EQ(check_maj(med_function(), kSmall).result, Result::holds);
  EXPECT_EQ(check_min(am_function(), kSmall).result, Result::holds);
  const auto rr = check_rr(med_function(), kSmall);
  EXPECT_EQ(rr.result, Result::holds);
  EXPECT_EQ(rr.details["cardinality_equals_bound"], true);

  const auto f2 = f2_function();
  const auto bad = check_rr(f2, kSmall);
  ASSERT_EQ(bad.result, Result::fails);
  EXPECT_EQ(cubecon::condorcet_ties(bad.witness->profiles.at(0)).condorcet_score(), 0u);
  EXPECT_TRUE(replays(bad, f2));

  const auto maj_fail = check_maj(am_function(), kSmall);
  ASSERT_EQ(maj_fail.result, Result::fails);
  EXPECT_TRUE(replays(maj_fail, am_function()));
  const auto min_fail = check_min(med_function(), kSmall);
  ASSERT_EQ(min_fail.result, Result::fails);
  EXPECT_TRUE(replays(min_fail, med_function()));
}

TEST(IntersectionCondition, HypothesesIdentifyWholeCube) {
  const auto f2 = check_intersection_condition(f2_function(), 3);
  EXPECT_EQ(f2.result, Result::holds);
  EXPECT_EQ(f2.details["hypotheses_met"], true);
  EXPECT_EQ(f2.details["equals_f2"], true);
  EXPECT_EQ(f2.details["intersection"].size(), 8u);

  for (const auto& f : {med_function(), f3_function()}) {
    const auto v = check_intersection_condition(f, 3);
    EXPECT_EQ(v.result, Result::fails) << f.name();
    EXPECT_EQ(v.details["hypotheses_met"], false);
    EXPECT_TRUE(replays(v, f));
  }
}

TEST(Report, JsonShape) {
  const auto v = check_rr(f2_function(), kSmall);
  const auto j = to_json(v);
  EXPECT_EQ(j["axiom"], "RR");
  EXPECT_EQ(j["function"], "f2");
  EXPECT_EQ(j["result"], "fails");
  EXPECT_EQ(j["mode"]["kind"], "exhaustive");
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_FALSE(j.contains("seed"));
  EXPECT_EQ(j["profiles_checked"], 1);
}

}  // namespace
