#include <gtest/gtest.h>

#include <algorithm>

#include "test_common.hpp"

using namespace noeth;
using noeth::test::V;
using noeth::test::Vs;

namespace {

AccWitness pipeline(const Carrier& c) { return bounded_to_noeth_acc(listable_to_bounded(listable_from_enum(c))); }

std::vector<std::string> transcripts_strict(const StrictWitness& w, const Carrier& c) {
  std::vector<std::string> out;
  ExploreOptions o;
  o.visit = [&](const Transcript& t) { out.push_back(to_json(t, c).dump()); };
  explore_strict(w, c, kDefaultFuel, o);
  return out;
}

}  // namespace

TEST(AccToStrict, BoolAdversarial) {
  const auto c = carrier_from_spec("bool");
  for (const auto& w : {build_bool_noeth_acc(), pipeline(c)}) {
    const auto t = play_strict(acc_to_strict(w), c, Opponent::adversarial());
    EXPECT_EQ(to_string(t.verdict), "ProverWins:OpponentExhausted");
    EXPECT_LE(t.asks(), 2u);
  }
}

TEST(AccToStrict, EmptyCarrier) {
  const auto c = carrier_from_spec("empty");
  const auto t = play_strict(acc_to_strict(pipeline(c)), c, Opponent::exhaustive());
  EXPECT_EQ(to_string(t.verdict), "ProverWins:OpponentExhausted");
  EXPECT_EQ(t.asks(), 0u);
}

TEST(AccToStrict, AbsurdUnreachableOnSmallCarriers) {
  for (const auto& spec : noeth::test::small_carriers()) {
    const auto c = carrier_from_spec(spec);
    for (const auto& w : {pipeline(c), eager_noeth_acc(c)}) {
      const auto s = explore_strict(acc_to_strict(w), c);
      EXPECT_TRUE(s.all_won()) << spec;
      EXPECT_EQ(s.dishonest, 0u) << spec;
    }
  }
}

TEST(StrictSet, RoundTripIsIdentity) {
  const auto c = carrier_from_spec("bool");
  const auto w = strict_from_bound(2);
  EXPECT_EQ(transcripts_strict(w, c), transcripts_strict(set_to_strict(strict_to_set(w)), c));
}

TEST(StrictSet, SetPlayExhausts) {
  const auto c = carrier_from_spec("bool");
  const auto s = explore_set(strict_to_set(strict_from_bound(2)), c);
  EXPECT_TRUE(s.all_won());
  EXPECT_EQ(s.max_asks, 2u);
}

TEST(StrictGame, InjectionHasNoTells) {
  const auto c = carrier_from_spec("fin:3");
  ExploreOptions o;
  o.visit = [](const Transcript& t) {
    for (const auto& m : t.moves) EXPECT_EQ(m.kind, Move::Kind::Ask);
  };
  EXPECT_TRUE(explore_game(strict_to_game(strict_from_bound(3)), c, kDefaultFuel, o).all_won());
  EXPECT_TRUE(explore_game(strict_to_game(strict_from_bound(0)), carrier_from_spec("empty")).all_won());
}

TEST(ExposeListable, PropUnit) {
  const auto c = carrier_from_spec("unit");
  const auto l = expose_to_listable(expose_from_prop(c), V(c, "()"));
  EXPECT_EQ(l.items, Vs(c, "()"));
  EXPECT_EQ(l.locate(V(c, "()")).index, 0u);
}

TEST(ExposeListable, BoolSameElementSet) {
  const auto c = carrier_from_spec("bool");
  for (const auto& x0 : enumerate(c)) {
    auto items = expose_to_listable(listable_to_expose(listable_from_enum(c)), x0).items;
    std::sort(items.begin(), items.end());
    EXPECT_EQ(items, enumerate(c));
  }
}

TEST(ExposeListable, LocateAuditAndMultiset) {
  for (const auto& spec : noeth::test::small_carriers()) {
    const auto c = carrier_from_spec(spec);
    const auto l = listable_from_enum(c);
    for (const auto& x0 : enumerate(c)) {
      const auto back = expose_to_listable(listable_to_expose(l), x0);
      auto a = back.items, b = l.items;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b) << spec;
      for (const auto& v : enumerate(c)) EXPECT_EQ(validate_mem(c, back.items, back.locate(v), v), Validity::Valid);
    }
  }
}

TEST(ExposeListable, FuelExhaustion) {
  const auto c = carrier_from_spec("bool");
  struct Loop {
    static ExposeWitness make() {
      return ExposeWitness::ask([](const Value&) { return make(); });
    }
  };
  try {
    expose_to_listable(Loop::make(), V(c, "true"), 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FuelExhausted);
  }
}

TEST(ExposeAcc, UnitTrace) {
  const auto c = carrier_from_spec("unit");
  const auto t = play_noeth_acc(expose_to_acc(expose_from_prop(c)), c, Opponent::scripted(Vs(c, "(),()")));
  EXPECT_EQ(to_string(t.verdict), "ProverWins:EvidenceValidated");
  EXPECT_EQ(std::get<DupEvidence>(t.evidence), (DupEvidence{0, 1}));
}

TEST(ExposeAcc, BoolExhaustive) {
  const auto c = carrier_from_spec("bool");
  EXPECT_TRUE(explore_noeth_acc(expose_to_acc(listable_to_expose(listable_from_enum(c))), c).all_won());
}

TEST(ExposeAcc, EmptyVacuous) {
  const auto c = carrier_from_spec("empty");
  const auto t = play_noeth_acc(expose_to_acc(listable_to_expose(listable_from_enum(c))), c, Opponent::exhaustive());
  EXPECT_EQ(to_string(t.verdict), "ProverWins:OpponentExhausted");
}

TEST(Honesty, ConversionsOnSmallCarriers) {
  for (const auto& spec : noeth::test::small_carriers()) {
    const auto c = carrier_from_spec(spec);
    const auto strict = acc_to_strict(pipeline(c));
    EXPECT_EQ(explore_set(strict_to_set(strict), c).dishonest, 0u) << spec;
    EXPECT_EQ(explore_game(strict_to_game(strict), c).dishonest, 0u) << spec;
    EXPECT_TRUE(explore_noeth_acc(expose_to_acc(listable_to_expose(listable_from_enum(c))), c).all_won()) << spec;
  }
}
