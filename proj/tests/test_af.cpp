#include <gtest/gtest.h>

#include "test_common.hpp"

using namespace noeth;
using noeth::test::V;
using noeth::test::Vs;

namespace {

// Closed form of the extension law with pivots x_1..x_k:
//   base(y,z) or some base(x_i,y) or some base(x_i,x_j) with i<j.
bool closed_form(const Relation& r, const std::vector<Value>& pivots, const Value& y, const Value& z) {
  if (r.base(y, z)) return true;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (r.base(pivots[i], y)) return true;
    for (std::size_t j = i + 1; j < pivots.size(); ++j)
      if (r.base(pivots[i], pivots[j])) return true;
  }
  return false;
}

// Literal 2^k unfolding: each bit picks the left disjunct (keep arguments)
// or the right one (newest pivot, first argument) at one level.
bool unfolded(const Relation& r, const std::vector<Value>& pivots, const Value& y, const Value& z) {
  const std::size_t k = pivots.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Value a = y, b = z;
    for (std::size_t level = k; level >= 1; --level) {
      if (mask & (std::size_t{1} << (level - 1))) {
        b = a;
        a = pivots[level - 1];
      }
    }
    if (r.base(a, b)) return true;
  }
  return false;
}

Relation with_pivots(Relation r, const std::vector<Value>& pivots) {
  for (const auto& p : pivots) r = r.extended(p);
  return r;
}

std::vector<Relation> relations_on(const Carrier& c) {
  return {relations::equality(), relations::total(), relations::same_parity(c), relations::leq(c), relations::empty()};
}

}  // namespace

TEST(Relation, LeqWithOnePivot) {
  const auto c = carrier_from_spec("fin:3");
  const auto r = relations::leq(c).extended(V(c, "1"));
  EXPECT_TRUE(eval_relation(r, V(c, "2"), V(c, "0")));
  EXPECT_FALSE(eval_relation(relations::leq(c), V(c, "2"), V(c, "0")));
}

TEST(Relation, NoPivotsIsBase) {
  const auto c = carrier_from_spec("fin:3");
  for (const auto& r : relations_on(c))
    for (const auto& y : enumerate(c))
      for (const auto& z : enumerate(c)) EXPECT_EQ(eval_relation(r, y, z), r.base(y, z)) << r.name();
}

TEST(Relation, ConstantDisjunctFromRepeatedPivot) {
  const auto c = carrier_from_spec("fin:3");
  const auto r = with_pivots(relations::equality(), Vs(c, "0,0"));
  EXPECT_TRUE(eval_relation(r, V(c, "1"), V(c, "2")));
}

TEST(Relation, ExtensionLawMatchesUnfolding) {
  const auto c = carrier_from_spec("fin:3");
  const auto values = enumerate(c);
  for (const auto& base : relations_on(c))
    for (std::size_t k = 0; k <= 4; ++k)
      for (const auto& pivots : noeth::test::sequences(values, k)) {
        const auto r = with_pivots(base, pivots);
        for (const auto& y : values)
          for (const auto& z : values) {
            const bool got = eval_relation(r, y, z);
            ASSERT_EQ(got, unfolded(base, pivots, y, z)) << base.name() << " k=" << k;
            ASSERT_EQ(got, closed_form(base, pivots, y, z)) << base.name() << " k=" << k;
          }
      }
}

TEST(Relation, FromSpec) {
  const auto c = carrier_from_spec("fin:4");
  for (const std::string name : {"eq", "total", "empty", "parity", "leq"}) EXPECT_NO_THROW(relations::from_spec(name, c));
  EXPECT_THROW(relations::from_spec("nope", c), Error);
}

TEST(AfToRel, TotalOnBool) {
  const auto c = carrier_from_spec("bool");
  const auto w = af_to_noeth_acc_r(af_total(), relations::total());
  ExploreOptions o;
  o.visit = [](const Transcript& t) {
    EXPECT_EQ(t.asks(), 2u);
    EXPECT_EQ(std::get<RelEvidence>(t.evidence), (RelEvidence{0, 1}));
  };
  EXPECT_TRUE(explore_noeth_acc_r(w, c, relations::total(), kDefaultFuel, o).all_won());
}

TEST(AfToRel, OnePivotEqualityOnFin2) {
  const auto c = carrier_from_spec("fin:2");
  const auto eq = relations::equality();
  const auto af = noeth_acc_to_afeq(bounded_to_noeth_acc(listable_to_bounded(listable_from_enum(c))));
  const auto s = explore_noeth_acc_r(af_to_noeth_acc_r(af, eq), c, eq);
  EXPECT_TRUE(s.all_won());
  EXPECT_EQ(s.dishonest, 0u);
}

TEST(AfToRel, ParityOnFin4) {
  const auto c = carrier_from_spec("fin:4");
  const auto par = relations::same_parity(c);
  const auto s = explore_noeth_acc_r(af_to_noeth_acc_r(noeth_acc_r_to_af(eager_noeth_acc_r(par)), par), c, par);
  EXPECT_TRUE(s.all_won());
}

TEST(RelToAf, FinOneEquality) {
  const auto c = carrier_from_spec("fin:1");
  const auto af = noeth_acc_r_to_af(eager_noeth_acc_r(relations::equality()));
  const auto t = play_af(af, c, relations::equality(), Opponent::exhaustive());
  EXPECT_EQ(to_string(t.verdict), "ProverWins:EvidenceValidated");
  EXPECT_EQ(std::get<TotalityClaim>(t.evidence), TotalityClaim::constant(0, 1));
}

TEST(RelToAf, TotalAuditPasses) {
  const auto c = carrier_from_spec("bool");
  EXPECT_TRUE(explore_af(af_total(), c, relations::total()).all_won());
  EXPECT_TRUE(explore_af(noeth_acc_r_to_af(eager_noeth_acc_r(relations::total())), c, relations::total()).all_won());
}

TEST(AfEq, BoolWitness) {
  const auto c = carrier_from_spec("bool");
  EXPECT_TRUE(explore_af(noeth_acc_to_afeq(build_bool_noeth_acc()), c, relations::equality()).all_won());
  const auto back = afeq_to_noeth_acc(noeth_acc_to_afeq(build_bool_noeth_acc()));
  const auto s = explore_noeth_acc(back, c);
  EXPECT_TRUE(s.all_won());
  EXPECT_LE(s.max_asks, 3u + 2u);
}

// Both directions preserve honesty for every relation that admits an
// honest witness, on every small carrier.
TEST(AfRoundTrip, SmallCarriers) {
  for (const auto& spec : noeth::test::small_carriers()) {
    const auto c = carrier_from_spec(spec);
    for (const auto& rel : {relations::equality(), relations::total(), relations::same_parity(c)}) {
      const auto src = eager_noeth_acc_r(rel);
      ExploreOptions o;
      o.max_asks = 12;
      EXPECT_TRUE(explore_af(noeth_acc_r_to_af(src), c, rel, kDefaultFuel, o).all_won()) << spec << rel.name();
      const auto back = af_to_noeth_acc_r(noeth_acc_r_to_af(src), rel);
      const auto s = explore_noeth_acc_r(back, c, rel, kDefaultFuel, o);
      EXPECT_TRUE(s.all_won()) << spec << " " << rel.name();
      EXPECT_EQ(s.dishonest, 0u);
    }
  }
}

TEST(AfRoundTrip, Fin6Relations) {
  const auto c = carrier_from_spec("fin:6");
  for (const auto& rel : {relations::equality(), relations::total(), relations::same_parity(c)}) {
    const auto back = af_to_noeth_acc_r(noeth_acc_r_to_af(eager_noeth_acc_r(rel)), rel);
    const auto s = explore_noeth_acc_r(back, c, rel);
    EXPECT_TRUE(s.all_won()) << rel.name();
    EXPECT_EQ(s.dishonest, 0u);
  }
}

TEST(AfEmptyRelation, VacuousOnEmptyCarrier) {
  const auto c = carrier_from_spec("empty");
  const auto rel = relations::empty();
  const auto back = af_to_noeth_acc_r(noeth_acc_r_to_af(eager_noeth_acc_r(rel)), rel);
  EXPECT_TRUE(explore_noeth_acc_r(back, c, rel).all_won());
}

TEST(AfEmptyRelation, NoHonestWitnessOnInhabitedCarrier) {
  const auto c = carrier_from_spec("unit");
  const auto rel = relations::empty();
  const auto t = play_af(af_total(), c, rel, Opponent::exhaustive());
  EXPECT_EQ(t.verdict.kind, Verdict::Kind::WitnessDishonest);
  ExploreOptions o;
  o.max_asks = 6;
  const auto s = explore_noeth_acc_r(eager_noeth_acc_r(rel), c, rel, kDefaultFuel, o);
  EXPECT_EQ(s.prover_wins, 0u);
  EXPECT_EQ(s.depth_limited, s.plays);
  // A relational witness from a bound needs reflexivity.
  try {
    bounded_to_noeth_acc_r(listable_to_bounded(listable_from_enum(c)), rel, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotReflexive);
  }
}

TEST(AfDemotion, DishonestClaimFails) {
  const auto c = carrier_from_spec("bool");
  const auto eq = relations::equality();
  // Claims totality of equality after a single pivot.
  const auto liar = AfWitness::afsup([](const Value&) { return AfWitness::afzt(TotalityClaim::base_total()); });
  EXPECT_GT(explore_af(liar, c, eq).dishonest, 0u);
  EXPECT_GT(explore_noeth_acc_r(af_to_noeth_acc_r(liar, eq), c, eq).dishonest, 0u);
}

TEST(AfEvidence, EqualityBijection) {
  const auto c = carrier_from_spec("fin:3");
  for (const auto& acc : noeth::test::sequences(enumerate(c), 3))
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const DupEvidence d{i, j};
        EXPECT_EQ(to_dup(to_rel(d)), d);
        EXPECT_EQ(validate_dup(c, acc, d) == Validity::Valid,
                  validate_dup_r(relations::equality(), acc, to_rel(d)) == Validity::Valid);
      }
}

TEST(RelFromBound, ReflexiveRelations) {
  const auto c = carrier_from_spec("fin:3");
  const auto b = listable_to_bounded(listable_from_enum(c));
  for (const auto& rel : {relations::equality(), relations::same_parity(c), relations::leq(c)})
    EXPECT_TRUE(explore_noeth_acc_r(bounded_to_noeth_acc_r(b, rel, c), c, rel).all_won()) << rel.name();
}
