#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/games.hpp"
#include "noeth/relation.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

struct AfztNode {
  TotalityClaim claim;
};

// Almost-full witness. Afzt asserts the effective relation is total; Afsup
// asks for a pivot, extending the relation by R(pivot, .).
class AfWitness : public Tree<AfztNode, AskNode<AfWitness>> {
 public:
  using Afzt = AfztNode;
  using Afsup = AskNode<AfWitness>;

  static AfWitness afzt(TotalityClaim claim) { return AfWitness(Node{Afzt{claim}}); }
  static AfWitness afsup(std::function<AfWitness(const Value&)> next) { return AfWitness(Node{Afsup{std::move(next)}}); }

 private:
  using Tree::Tree;
};

struct RelStop {
  RelEvidence evidence;
};

// Like AccWitness, but a Stop needs only two related elements.
class RelAccWitness : public Tree<RelStop, AskNode<RelAccWitness>> {
 public:
  using Ask = AskNode<RelAccWitness>;
  using Stop = RelStop;

  static RelAccWitness stop(RelEvidence e) { return RelAccWitness(Node{Stop{e}}); }
  static RelAccWitness ask(std::function<RelAccWitness(const Value&)> next) {
    return RelAccWitness(Node{Ask{std::move(next)}});
  }

 private:
  using Tree::Tree;
};

namespace detail {

// Evidence for R_level(full[from], full[to]) in terms of the base relation.
// The left disjunct keeps the pair; the right disjunct R(x_level, y) swaps in
// the pivot fed at iteration level-1.
inline std::optional<RelEvidence> demote(const Relation& rel, std::span<const Value> full, std::size_t level,
                                         std::size_t from, std::size_t to) {
  if (level == 0) {
    if (rel.base(full[from], full[to])) return RelEvidence{from, to};
    return std::nullopt;
  }
  if (auto e = demote(rel, full, level - 1, from, to)) return e;
  return demote(rel, full, level - 1, level - 1, from);
}

inline RelAccWitness af_to_rel(const AfWitness& w, const Relation& rel, Accumulator acc) {
  if (const auto* sup = std::get_if<AfWitness::Afsup>(&w.node())) {
    auto next = sup->next;
    return RelAccWitness::ask([next, rel, acc](const Value& x) {
      Accumulator grown = acc;
      grown.push_back(x);
      return af_to_rel(next(x), rel, std::move(grown));
    });
  }
  // Total at this level: any two further answers are related.
  return RelAccWitness::ask([rel, acc](const Value& a) {
    return RelAccWitness::ask([rel, acc, a](const Value& b) {
      Accumulator full = acc;
      full.push_back(a);
      full.push_back(b);
      const std::size_t level = acc.size();
      auto e = demote(rel, full, level, level, level + 1);
      if (!e) throw Error(Errc::EvidenceDemotionFailed, "effective relation not total at depth " + std::to_string(level));
      return RelAccWitness::stop(*e);
    });
  });
}

inline RelAccWitness eager_rel_from(const Relation& rel, Accumulator acc) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = i + 1; j < acc.size(); ++j)
      if (rel.base(acc[i], acc[j])) return RelAccWitness::stop({i, j});
  return RelAccWitness::ask([rel, acc](const Value& v) {
    Accumulator next = acc;
    next.push_back(v);
    return eager_rel_from(rel, std::move(next));
  });
}

inline RelAccWitness bounded_rel_chain(std::shared_ptr<const BoundedWitness> b, Accumulator acc) {
  if (acc.size() >= b->bound) {
    try {
      return RelAccWitness::stop(to_rel(b->dup_finder(acc)));
    } catch (const Error& e) {
      throw Error(Errc::DishonestWitness, std::string("bounded witness failed: ") + e.what());
    }
  }
  return RelAccWitness::ask([b, acc](const Value& v) {
    Accumulator next = acc;
    next.push_back(v);
    return bounded_rel_chain(b, std::move(next));
  });
}

}  // namespace detail

inline AfWitness af_total() { return AfWitness::afzt(TotalityClaim::base_total()); }

inline RelAccWitness af_to_noeth_acc_r(const AfWitness& w, const Relation& rel) {
  return detail::af_to_rel(w, rel.base_only(), {});
}

// A stop at depth k means base(x_from, x_to) holds for two pivots, and that
// constant is a disjunct of the k-fold extended relation.
inline AfWitness noeth_acc_r_to_af(const RelAccWitness& w) {
  if (const auto* stop = std::get_if<RelAccWitness::Stop>(&w.node()))
    return AfWitness::afzt(TotalityClaim::constant(stop->evidence.t_from, stop->evidence.t_to));
  auto next = std::get<RelAccWitness::Ask>(w.node()).next;
  return AfWitness::afsup([next](const Value& x) { return noeth_acc_r_to_af(next(x)); });
}

inline RelAccWitness acc_to_rel(const AccWitness& w) {
  if (const auto* stop = std::get_if<AccWitness::Stop>(&w.node())) return RelAccWitness::stop(to_rel(stop->evidence));
  auto next = std::get<AccWitness::Ask>(w.node()).next;
  return RelAccWitness::ask([next](const Value& x) { return acc_to_rel(next(x)); });
}

inline AccWitness rel_to_acc(const RelAccWitness& w) {
  if (const auto* stop = std::get_if<RelAccWitness::Stop>(&w.node())) return AccWitness::stop(to_dup(stop->evidence));
  auto next = std::get<RelAccWitness::Ask>(w.node()).next;
  return AccWitness::ask([next](const Value& x) { return rel_to_acc(next(x)); });
}

inline AccWitness afeq_to_noeth_acc(const AfWitness& w) { return rel_to_acc(af_to_noeth_acc_r(w, relations::equality())); }

inline AfWitness noeth_acc_to_afeq(const AccWitness& w) { return noeth_acc_r_to_af(acc_to_rel(w)); }

// Stops at the first related pair; well-founded exactly when the relation
// is almost-full on the carrier being played.
inline RelAccWitness eager_noeth_acc_r(const Relation& rel) { return detail::eager_rel_from(rel.base_only(), {}); }

// Pigeonhole pairs are equal, so they are related once R is reflexive.
inline RelAccWitness bounded_to_noeth_acc_r(const BoundedWitness& b, const Relation& rel, const Carrier& c) {
  for (const auto& v : store_values(c))
    if (!rel.base(v, v))
      throw Error(Errc::NotReflexive, "relation '" + rel.name() + "' is not reflexive on " + c.spec());
  return detail::bounded_rel_chain(std::make_shared<const BoundedWitness>(b), {});
}

inline Transcript play_noeth_acc_r(const RelAccWitness& w, const Carrier& c, const Relation& rel, const Opponent& o,
                                   std::size_t fuel = kDefaultFuel) {
  const Relation base = rel.base_only();
  return detail::drive(w, c, o, fuel, AskRule::Any, [&base](const RelAccWitness::Node& node, detail::Referee& ref) {
    const auto& e = std::get<RelAccWitness::Stop>(node).evidence;
    ref.transcript().evidence = e;
    Validity v = Validity::Invalid;
    try {
      v = validate_dup_r(base, ref.acc(), e);
    } catch (const Error&) {
    }
    ref.finish(v == Validity::Valid ? Verdict::prover_wins(Verdict::Reason::EvidenceValidated)
                                    : Verdict::of(Verdict::Kind::WitnessDishonest));
  });
}

// At Afzt the claim is checked and, when the carrier is enumerable, the
// effective relation (base extended by every pivot fed so far) is audited
// for totality.
inline Transcript play_af(const AfWitness& w, const Carrier& c, const Relation& rel, const Opponent& o,
                          std::size_t fuel = kDefaultFuel) {
  const Relation base = rel.base_only();
  return detail::drive(w, c, o, fuel, AskRule::Any, [&base](const AfWitness::Node& node, detail::Referee& ref) {
    const auto& claim = std::get<AfWitness::Afzt>(node).claim;
    const auto& acc = ref.acc();
    const Carrier& c = ref.carrier();
    ref.transcript().evidence = claim;
    bool ok = true;
    if (claim.kind == TotalityClaim::Kind::ConstantDisjunct) {
      ok = claim.t_from < claim.t_to && claim.t_to < acc.size() && base.base(acc[claim.t_from], acc[claim.t_to]);
    }
    if (ok && c.caps().has_enum) {
      const auto values = enumerate(c);
      Relation effective = base;
      for (const auto& p : acc) effective = effective.extended(p);
      for (const auto& y : values) {
        for (const auto& z : values) {
          if (claim.kind == TotalityClaim::Kind::BaseTotal ? !base.base(y, z) : !eval_relation(effective, y, z)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    } else if (ok) {
      ref.distrust();
    }
    ref.finish(ok ? Verdict::prover_wins(Verdict::Reason::EvidenceValidated)
                  : Verdict::of(Verdict::Kind::WitnessDishonest));
  });
}

inline ExploreSummary explore_noeth_acc_r(const RelAccWitness& w, const Carrier& c, const Relation& rel,
                                          std::size_t fuel = kDefaultFuel, const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_noeth_acc_r(w, c, rel, o, fuel); }, c, AskRule::Any, opts);
}

inline ExploreSummary explore_af(const AfWitness& w, const Carrier& c, const Relation& rel,
                                 std::size_t fuel = kDefaultFuel, const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_af(w, c, rel, o, fuel); }, c, AskRule::Any, opts);
}

}  // namespace noeth
