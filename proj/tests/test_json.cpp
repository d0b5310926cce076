#include <gtest/gtest.h>

#include "test_common.hpp"

using namespace noeth;
using noeth::test::Vs;

namespace {

void expect_round_trip(const Transcript& t, const Carrier& c) {
  const auto j = to_json(t, c);
  const auto back = transcript_from_json(Json::parse(j.dump()), c);
  EXPECT_EQ(to_json(back, c).dump(), j.dump());
  EXPECT_EQ(back.accumulator(), t.accumulator());
}

}  // namespace

TEST(Json, DupSchema) {
  const auto c = carrier_from_spec("bool");
  const auto t = play_noeth_acc(build_bool_noeth_acc(), c, Opponent::scripted(Vs(c, "true,false,true")));
  EXPECT_EQ(to_json(t, c).dump(),
            R"({"moves":[{"ask":"true"},{"ask":"false"},{"ask":"true"}],"evidence":{"kind":"dup","t_early":0,"t_late":2},)"
            R"("verdict":"ProverWins:EvidenceValidated","fuel_used":4,"freshness_verified":true,"eq_calls":1})");
}

TEST(Json, RelSchema) {
  EXPECT_EQ(to_json(RelEvidence{1, 3}).dump(), R"({"kind":"rel","t_from":1,"t_to":3})");
}

TEST(Json, RoundTripsAcrossEncodings) {
  const auto c = carrier_from_spec("sum:unit,bool");
  ExploreOptions o;
  o.visit = [&](const Transcript& t) { expect_round_trip(t, c); };
  explore_noeth_acc(eager_noeth_acc(c), c, kDefaultFuel, o);
  explore_expose(listable_to_expose(listable_from_enum(c)), c, kDefaultFuel, o);
  explore_strict(strict_from_bound(3), c, kDefaultFuel, o);
  explore_game(GameWitness::tell(enumerate(c)[0], strict_to_game(strict_from_bound(2))), c, kDefaultFuel, o);
  explore_af(noeth_acc_r_to_af(eager_noeth_acc_r(relations::equality())), c, relations::equality(), kDefaultFuel, o);
  explore_noeth_acc_r(eager_noeth_acc_r(relations::equality()), c, relations::equality(), kDefaultFuel, o);
  const auto f = carrier_from_spec("bool");
  expect_round_trip(play_noeth_acc(build_bool_noeth_acc(), f, Opponent::scripted({}), 1), f);
}

TEST(Json, VerdictStrings) {
  for (const auto& v : {Verdict::prover_wins(Verdict::Reason::EvidenceValidated),
                        Verdict::prover_wins(Verdict::Reason::OpponentExhausted), Verdict::of(Verdict::Kind::WitnessDishonest),
                        Verdict::of(Verdict::Kind::IllegalOpponentMove), Verdict::of(Verdict::Kind::FuelExhausted),
                        Verdict::of(Verdict::Kind::IncompletePlay)})
    EXPECT_EQ(to_string(verdict_from_string(to_string(v))), to_string(v));
  EXPECT_THROW(verdict_from_string("Nope"), Error);
}

TEST(Json, UnknownEvidenceKind) {
  EXPECT_THROW(evidence_from_json(Json{{"kind", "mystery"}}), Error);
}
