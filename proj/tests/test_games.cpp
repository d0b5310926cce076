#include <gtest/gtest.h>

#include "test_common.hpp"

using namespace noeth;
using noeth::test::V;
using noeth::test::Vs;

namespace {

std::string verdict(const Transcript& t) { return to_string(t.verdict); }
std::string dump(const Transcript& t, const Carrier& c) { return to_json(t, c).dump(); }

AccWitness endless() {
  return AccWitness::ask([](const Value&) { return endless(); });
}

}  // namespace

TEST(PlayAcc, BoolScriptedRepeat) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_noeth_acc(build_bool_noeth_acc(), c, Opponent::scripted(Vs(c, "true,true")));
  EXPECT_EQ(verdict(t), "ProverWins:EvidenceValidated");
  EXPECT_EQ(std::get<DupEvidence>(t.evidence), (DupEvidence{0, 1}));
}

TEST(PlayAcc, EmptyCarrierExhaustsOpponent) {
  const auto c = carrier_from_spec("empty");
  const auto t = play_noeth_acc(eager_noeth_acc(c), c, Opponent::exhaustive());
  EXPECT_EQ(verdict(t), "ProverWins:OpponentExhausted");
  EXPECT_EQ(t.asks(), 0u);
}

TEST(PlayAcc, ExhaustiveBoolWithinThree) {
  const auto c = carrier_from_spec("bool");
  const auto s = explore_noeth_acc(build_bool_noeth_acc(), c);
  EXPECT_TRUE(s.all_won());
  EXPECT_EQ(s.plays, 6u);  // TT, TFT, TFF, FF, FTT, FTF
  EXPECT_EQ(s.max_asks, 3u);
  for (auto o : {Opponent::exhaustive(), Opponent::adversarial(), Opponent::random(7)})
    EXPECT_TRUE(play_noeth_acc(build_bool_noeth_acc(), c, o).verdict.prover_won());
}

TEST(PlayAcc, ScriptRunningOutIsIncomplete) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_noeth_acc(build_bool_noeth_acc(), c, Opponent::scripted(Vs(c, "true")));
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::IncompletePlay);
}

TEST(PlayAcc, LyingStopIsDishonest) {
  const auto c = carrier_from_spec("bool");
  const auto liar = AccWitness::ask([](const Value&) {
    return AccWitness::ask([](const Value&) { return AccWitness::stop({0, 1}); });
  });
  const auto t = play_noeth_acc(liar, c, Opponent::scripted(Vs(c, "true,false")));
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::WitnessDishonest);
  EXPECT_EQ(explore_noeth_acc(liar, c).dishonest, 2u);
}

TEST(PlayAcc, IllTypedAnswerIsIllegal) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_noeth_acc(build_bool_noeth_acc(), c, Opponent::scripted({Value::index(5)}));
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::IllegalOpponentMove);
}

TEST(PlayAcc, FuelBudget) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_noeth_acc(build_bool_noeth_acc(), c, Opponent::scripted(Vs(c, "true,true")), 1);
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::FuelExhausted);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(t.evidence));
  EXPECT_LE(t.fuel_used, 1u);
}

TEST(PlayStrict, AdversarialExhaustsAfterTwo) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_strict(strict_from_bound(2), c, Opponent::adversarial());
  EXPECT_EQ(verdict(t), "ProverWins:OpponentExhausted");
  EXPECT_EQ(t.asks(), 2u);
}

TEST(PlayStrict, ShortChainReachesAbsurd) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_strict(strict_from_bound(1), c, Opponent::adversarial());
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::WitnessDishonest);
}

TEST(PlayStrict, RepeatIsIllegal) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_strict(strict_from_bound(2), c, Opponent::scripted(Vs(c, "true,true")));
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::IllegalOpponentMove);
}

TEST(PlayStrict, NoRepeatsWhenVerified) {
  for (const auto& spec : noeth::test::small_carriers()) {
    const auto c = carrier_from_spec(spec);
    ExploreOptions opts;
    opts.visit = [&](const Transcript& t) {
      ASSERT_TRUE(t.freshness_verified);
      const auto acc = t.accumulator();
      EXPECT_FALSE(scan_for_dup(c, acc).has_value()) << spec;
    };
    explore_strict(strict_from_bound(4), c, kDefaultFuel, opts);
  }
}

TEST(PlaySet, ExhaustsAfterTwo) {
  const auto c = carrier_from_spec("bool");
  const auto s = explore_set(strict_to_set(strict_from_bound(2)), c);
  EXPECT_TRUE(s.all_won());
  EXPECT_EQ(s.plays, 2u);
  EXPECT_EQ(s.max_asks, 2u);
}

TEST(PlaySet, ExcludedValueIsRefused) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_strict(strict_to_set(strict_from_bound(2)), c, Opponent::scripted(Vs(c, "true,true")));
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::IllegalOpponentMove);
}

TEST(PlayGame, TellConsumesAFreshOption) {
  const auto c = carrier_from_spec("bool");
  const auto w = GameWitness::tell(V(c, "true"), strict_to_game(strict_from_bound(1)));
  const auto t = play_game(w, c, Opponent::adversarial());
  EXPECT_EQ(verdict(t), "ProverWins:OpponentExhausted");
  EXPECT_EQ(t.asks(), 1u);
  ASSERT_EQ(t.moves.size(), 2u);
  EXPECT_EQ(t.moves[0].kind, Move::Kind::Tell);
}

TEST(PlayGame, InjectionMatchesStrictPlay) {
  for (const std::string spec : {"empty", "unit", "bool", "fin:3"}) {
    const auto c = carrier_from_spec(spec);
    const auto strict = strict_from_bound(2);
    const auto game = strict_to_game(strict);
    std::vector<std::string> a, b;
    ExploreOptions oa, ob;
    oa.visit = [&](const Transcript& t) { a.push_back(dump(t, c)); };
    ob.visit = [&](const Transcript& t) { b.push_back(dump(t, c)); };
    explore_strict(strict, c, kDefaultFuel, oa);
    explore_game(game, c, kDefaultFuel, ob);
    EXPECT_EQ(a, b) << spec;
  }
}

TEST(PlayExpose, PropUnit) {
  const auto c = carrier_from_spec("unit");
  const auto t = play_expose(expose_from_prop(c), c, Opponent::scripted(Vs(c, "()")));
  EXPECT_EQ(verdict(t), "ProverWins:EvidenceValidated");
  EXPECT_TRUE(std::get<CompletenessReport>(t.evidence).audited);
}

TEST(PlayExpose, ListableBoolUnderAnyOpponent) {
  const auto c = carrier_from_spec("bool");
  const auto w = listable_to_expose(listable_from_enum(c));
  for (auto o : {Opponent::exhaustive(), Opponent::adversarial(), Opponent::random(3), Opponent::scripted({})}) {
    const auto t = play_expose(w, c, o);
    EXPECT_EQ(verdict(t), "ProverWins:EvidenceValidated");
    EXPECT_EQ(std::get<CompletenessReport>(t.evidence).locations, (std::vector<std::size_t>{0, 1}));
  }
}

TEST(PlayExpose, PrematureStopIsDishonest) {
  const auto c = carrier_from_spec("bool");
  const auto w = ExposeWitness::ask([](const Value&) { return ExposeWitness::stop([](const Value&) { return MemEvidence{0}; }); });
  const auto t = play_expose(w, c, Opponent::scripted(Vs(c, "true")));
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::WitnessDishonest);
}

TEST(Opponents, RandomIsSeedDeterministic) {
  const auto c = carrier_from_spec("fin:4");
  const auto w = eager_noeth_acc(c);
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_EQ(dump(play_noeth_acc(w, c, Opponent::random(seed)), c), dump(play_noeth_acc(w, c, Opponent::random(seed)), c));
}

TEST(Opponents, AdversarialAvoidsRepeats) {
  const auto c = carrier_from_spec("fin:4");
  const auto t = play_noeth_acc(eager_noeth_acc(c), c, Opponent::adversarial());
  EXPECT_EQ(t.asks(), 5u);
  EXPECT_EQ(std::get<DupEvidence>(t.evidence), (DupEvidence{0, 4}));
}

TEST(Opponents, EnumerationStrategiesNeedEnumeration) {
  const auto c = carrier_from_spec("opaque:2");
  const auto t = play_strict(strict_from_bound(2), c, Opponent::exhaustive());
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::IncompletePlay);
}

TEST(Explore, OpaqueStrictTrustedMode) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto c = carrier_from_spec("opaque:" + std::to_string(n));
    const auto s = explore_strict(strict_from_bound(n), c);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(s.plays, fact);
    EXPECT_TRUE(s.all_won());
    EXPECT_EQ(s.eq_calls, 0u);
    EXPECT_EQ(c.eq_call_count(), 0u);
  }
}

TEST(Explore, DepthLimitIsReported) {
  const auto c = carrier_from_spec("bool");
  ExploreOptions opts;
  opts.max_asks = 3;
  const auto s = explore_noeth_acc(endless(), c, kDefaultFuel, opts);
  EXPECT_EQ(s.depth_limited, 8u);
  EXPECT_FALSE(s.all_won());
}
