#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/transcript.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

// How the opponent answers asks. Exhaustive walks the enumeration order
// (first fresh value in strict games, cyclically otherwise); Adversarial
// avoids repeats as long as it can. Both need an enumerable carrier.
class Opponent {
 public:
  struct Scripted {
    std::vector<Value> moves;
  };
  struct Exhaustive {};
  struct Random {
    std::uint64_t seed = 0;
  };
  struct Adversarial {};
  using Strategy = std::variant<Scripted, Exhaustive, Random, Adversarial>;

  static Opponent scripted(std::vector<Value> moves) { return Opponent(Scripted{std::move(moves)}); }
  static Opponent exhaustive() { return Opponent(Exhaustive{}); }
  static Opponent random(std::uint64_t seed) { return Opponent(Random{seed}); }
  static Opponent adversarial() { return Opponent(Adversarial{}); }

  const Strategy& strategy() const noexcept { return strategy_; }

 private:
  explicit Opponent(Strategy s) : strategy_(std::move(s)) {}
  Strategy strategy_;
};

// Rule applied to opponent answers at Ask nodes.
enum class AskRule {
  Any,     // repeats allowed
  Fresh,   // answer must not occur in the accumulator
  Shrink,  // answer is removed from the carrier after each move
};

namespace detail {

class OpponentCursor {
 public:
  explicit OpponentCursor(const Opponent& o) : opponent_(o) {
    if (const auto* r = std::get_if<Opponent::Random>(&o.strategy())) rng_.seed(r->seed);
  }

  std::optional<Value> next(const Carrier& current, std::span<const Value> acc, bool fresh_only) {
    if (const auto* s = std::get_if<Opponent::Scripted>(&opponent_.strategy())) {
      if (script_pos_ >= s->moves.size()) return std::nullopt;
      return s->moves[script_pos_++];
    }
    if (!current.caps().has_enum) return std::nullopt;
    const auto pool = enumerate(current);
    auto seen = [&](const Value& v) { return std::find(acc.begin(), acc.end(), v) != acc.end(); };
    std::vector<Value> fresh;
    for (const auto& v : pool)
      if (!seen(v)) fresh.push_back(v);

    std::optional<Value> out;
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, Opponent::Exhaustive>) {
            if (fresh_only) {
              if (!fresh.empty()) out = fresh.front();
            } else if (!pool.empty()) {
              out = pool[answered_ % pool.size()];
            }
          } else if constexpr (std::is_same_v<S, Opponent::Random>) {
            const auto& cands = fresh_only ? fresh : pool;
            if (!cands.empty()) out = cands[rng_() % cands.size()];
          } else if constexpr (std::is_same_v<S, Opponent::Adversarial>) {
            if (!fresh.empty()) {
              out = fresh.front();
            } else if (!fresh_only && !pool.empty()) {
              // Repeat the value whose last appearance is oldest.
              std::size_t best_age = 0;
              for (const auto& v : pool) {
                std::size_t last = 0;
                for (std::size_t t = 0; t < acc.size(); ++t)
                  if (acc[t] == v) last = t;
                const std::size_t age = acc.size() - last;
                if (!out || age > best_age) {
                  out = v;
                  best_age = age;
                }
              }
            }
          }
        },
        opponent_.strategy());
    if (out) ++answered_;
    return out;
  }

 private:
  const Opponent& opponent_;
  std::mt19937_64 rng_;
  std::size_t script_pos_ = 0;
  std::size_t answered_ = 0;
};

// Mutable state of one play: the transcript under construction.
class Referee {
 public:
  Referee(const Carrier& c, std::size_t fuel) : carrier_(c), current_(c), fuel_(fuel) {}

  bool spend() {
    if (t_.fuel_used >= fuel_) {
      finish(Verdict::of(Verdict::Kind::FuelExhausted));
      return false;
    }
    ++t_.fuel_used;
    return true;
  }

  void finish(Verdict v) {
    t_.verdict = v;
    if (v.kind == Verdict::Kind::FuelExhausted) t_.evidence = std::monostate{};
  }

  void record(Move::Kind kind, const Value& v) {
    t_.moves.push_back({kind, v});
    acc_.push_back(v);
  }

  void distrust() { t_.freshness_verified = false; }

  const Carrier& carrier() const noexcept { return carrier_; }
  const Carrier& current() const noexcept { return current_; }
  void shrink(const Value& v) { current_ = carrier_without(current_, v); }
  const Accumulator& acc() const noexcept { return acc_; }
  EqTally* tally() noexcept { return &tally_; }
  Transcript& transcript() noexcept { return t_; }

  Equality eq(const Value& a, const Value& b) { return value_eq(carrier_, a, b, &tally_); }

  bool carrier_empty(const Carrier& c) const {
    if (c.caps().size_bound && *c.caps().size_bound == 0) return true;
    return c.caps().has_enum && store_values(c).empty();
  }

  // No element outside the accumulator remains.
  bool fresh_exhausted() {
    const auto& c = carrier_;
    if (c.caps().has_enum && c.caps().has_eq) {
      for (const auto& v : enumerate(c)) {
        bool fresh = true;
        for (const auto& a : acc_)
          if (eq(a, v) == Equality::Equal) {
            fresh = false;
            break;
          }
        if (fresh) return false;
      }
      return true;
    }
    if (c.caps().size_bound) {
      distrust();
      return acc_.size() >= *c.caps().size_bound;
    }
    return false;
  }

  bool shrink_exhausted() const {
    if (current_.caps().size_bound && *current_.caps().size_bound == 0) return true;
    return current_.caps().has_enum && enumerate(current_).empty();
  }

  // Well-typed and not excluded from the given carrier.
  bool admissible(const Carrier& c, const Value& v) {
    if (!well_typed(c, v)) return false;
    if (c.exclusions().empty()) return true;
    if (!c.caps().has_eq) {
      distrust();
      return true;
    }
    for (const auto& x : c.exclusions())
      if (value_eq(c, x, v, &tally_) == Equality::Equal) return false;
    return true;
  }

  bool fresh(const Value& v) {
    if (!carrier_.caps().has_eq) {
      distrust();
      return true;
    }
    for (const auto& a : acc_)
      if (eq(a, v) == Equality::Equal) return false;
    return true;
  }

  Transcript take() {
    t_.eq_calls = tally_.calls;
    return std::move(t_);
  }

 private:
  const Carrier& carrier_;
  Carrier current_;
  std::size_t fuel_;
  Transcript t_;
  Accumulator acc_;
  EqTally tally_;
};

template <class W>
concept HasTell = requires { typename W::Tell; };

// Walks a witness against an opponent. Ask and Tell nodes are handled here;
// any other node is terminal and handed to on_terminal, which must call
// Referee::finish.
template <class W, class OnTerminal>
Transcript drive(const W& root, const Carrier& c, const Opponent& o, std::size_t fuel, AskRule rule,
                 OnTerminal&& on_terminal) {
  Referee ref(c, fuel);
  OpponentCursor opponent(o);
  W cur = root;
  auto dishonest = [&] { ref.finish(Verdict::of(Verdict::Kind::WitnessDishonest)); };
  auto exhausted = [&] { ref.finish(Verdict::prover_wins(Verdict::Reason::OpponentExhausted)); };
  try {
    while (ref.spend()) {
      const auto& node = cur.node();
      if (const auto* ask = std::get_if<AskNode<W>>(&node)) {
        const bool over = rule == AskRule::Any      ? ref.carrier_empty(c)
                          : rule == AskRule::Fresh ? ref.fresh_exhausted()
                                                   : ref.shrink_exhausted();
        if (over) {
          exhausted();
          break;
        }
        const Carrier& pool = rule == AskRule::Shrink ? ref.current() : c;
        auto v = opponent.next(pool, ref.acc(), rule != AskRule::Any);
        if (!v) {
          ref.finish(Verdict::of(Verdict::Kind::IncompletePlay));
          break;
        }
        const bool legal = ref.admissible(pool, *v) && (rule != AskRule::Fresh || ref.fresh(*v));
        ref.record(Move::Kind::Ask, *v);
        if (!legal) {
          ref.finish(Verdict::of(Verdict::Kind::IllegalOpponentMove));
          break;
        }
        if (rule == AskRule::Shrink) {
          if (!pool.caps().has_eq) ref.distrust();
          ref.shrink(*v);
        }
        try {
          cur = ask->next(*v);
        } catch (const std::exception&) {
          dishonest();
          break;
        }
        continue;
      }
      if constexpr (HasTell<W>) {
        if (const auto* tell = std::get_if<typename W::Tell>(&node)) {
          if (!well_typed(c, tell->value)) {
            dishonest();
            break;
          }
          ref.record(Move::Kind::Tell, tell->value);
          if (rule == AskRule::Shrink) ref.shrink(tell->value);
          cur = *tell->next;
          continue;
        }
      }
      on_terminal(node, ref);
      break;
    }
  } catch (const Error&) {
    // A capability refused mid-audit; the witness cannot be vouched for.
    dishonest();
  }
  return ref.take();
}

inline void finish_dup(Referee& ref, const DupEvidence& e) {
  ref.transcript().evidence = e;
  switch (validate_dup(ref.carrier(), ref.acc(), e, ref.tally())) {
    case Validity::Valid: ref.finish(Verdict::prover_wins(Verdict::Reason::EvidenceValidated)); break;
    case Validity::Unverifiable:
      ref.distrust();
      ref.finish(Verdict::prover_wins(Verdict::Reason::EvidenceValidated));
      break;
    case Validity::Invalid: ref.finish(Verdict::of(Verdict::Kind::WitnessDishonest)); break;
  }
}

inline void finish_absurd(Referee& ref) { ref.finish(Verdict::of(Verdict::Kind::WitnessDishonest)); }

}  // namespace detail

// Repeats allowed; a Stop must carry a duplicate that validates.
inline Transcript play_noeth_acc(const AccWitness& w, const Carrier& c, const Opponent& o,
                                 std::size_t fuel = kDefaultFuel) {
  return detail::drive(w, c, o, fuel, AskRule::Any, [](const AccWitness::Node& node, detail::Referee& ref) {
    detail::finish_dup(ref, std::get<AccWitness::Stop>(node).evidence);
  });
}

// Only fresh answers; the game ends when the opponent has none left.
inline Transcript play_strict(const StrictWitness& w, const Carrier& c, const Opponent& o,
                              std::size_t fuel = kDefaultFuel) {
  return detail::drive(w, c, o, fuel, AskRule::Fresh,
                       [](const StrictWitness::Node&, detail::Referee& ref) { detail::finish_absurd(ref); });
}

// Each answer is removed from the carrier before the next ask.
inline Transcript play_strict(const SetWitness& w, const Carrier& c, const Opponent& o,
                              std::size_t fuel = kDefaultFuel) {
  return detail::drive(w.tree(), c, o, fuel, AskRule::Shrink,
                       [](const StrictWitness::Node&, detail::Referee& ref) { detail::finish_absurd(ref); });
}

// Tells are appended without freshness checks; asks as in play_strict.
inline Transcript play_game(const GameWitness& w, const Carrier& c, const Opponent& o,
                            std::size_t fuel = kDefaultFuel) {
  return detail::drive(w, c, o, fuel, AskRule::Fresh,
                       [](const GameWitness::Node&, detail::Referee& ref) { detail::finish_absurd(ref); });
}

// Asks unrestricted; at Stop the completeness function is audited against
// the enumeration when the carrier allows it.
inline Transcript play_expose(const ExposeWitness& w, const Carrier& c, const Opponent& o,
                              std::size_t fuel = kDefaultFuel) {
  return detail::drive(w, c, o, fuel, AskRule::Any, [](const ExposeWitness::Node& node, detail::Referee& ref) {
    const auto& locate = std::get<ExposeWitness::Stop>(node).locate;
    const Carrier& c = ref.carrier();
    CompletenessReport report;
    if (!(c.caps().has_enum && c.caps().has_eq)) {
      ref.transcript().evidence = report;
      ref.distrust();
      ref.finish(Verdict::prover_wins(Verdict::Reason::EvidenceValidated));
      return;
    }
    report.audited = true;
    bool ok = true;
    for (const auto& v : enumerate(c)) {
      MemEvidence m;
      try {
        m = locate(v);
      } catch (const std::exception&) {
        ok = false;
        break;
      }
      report.locations.push_back(m.index);
      if (validate_mem(c, ref.acc(), m, v, ref.tally()) != Validity::Valid) {
        ok = false;
        break;
      }
    }
    ref.transcript().evidence = report;
    ref.finish(ok ? Verdict::prover_wins(Verdict::Reason::EvidenceValidated)
                  : Verdict::of(Verdict::Kind::WitnessDishonest));
  });
}

// ---------------------------------------------------------------------------
// Exhaustive exploration

struct ExploreSummary {
  std::size_t plays = 0;
  std::size_t prover_wins = 0;
  std::size_t dishonest = 0;
  std::size_t illegal = 0;
  std::size_t fuel_exhausted = 0;
  std::size_t incomplete = 0;
  std::size_t depth_limited = 0;
  std::size_t max_asks = 0;
  std::size_t eq_calls = 0;
  bool all_freshness_verified = true;

  bool all_won() const noexcept { return plays == prover_wins; }
};

struct ExploreOptions {
  // Plays still asking after this many answers are cut off and counted as
  // depth_limited.
  std::size_t max_asks = 16;
  std::function<void(const Transcript&)> visit;
};

// Runs `play` against every legal opponent answer sequence, using the
// opponent's view of the carrier (store_values), so opaque carriers are
// explored in trusted mode.
template <class Play>
ExploreSummary explore(Play&& play, const Carrier& c, AskRule rule, const ExploreOptions& opts = {}) {
  ExploreSummary s;
  const auto store = store_values(c);
  std::vector<std::vector<Value>> stack{{}};
  while (!stack.empty()) {
    auto script = std::move(stack.back());
    stack.pop_back();
    Transcript t = play(Opponent::scripted(script));
    const bool script_ran_out =
        t.verdict.kind == Verdict::Kind::IncompletePlay && t.asks() == script.size();
    if (script_ran_out && script.size() < opts.max_asks) {
      const auto acc = t.accumulator();
      std::vector<Value> cands;
      for (const auto& v : store)
        if (rule == AskRule::Any || std::find(acc.begin(), acc.end(), v) == acc.end()) cands.push_back(v);
      if (!cands.empty()) {
        for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
          auto next = script;
          next.push_back(*it);
          stack.push_back(std::move(next));
        }
        continue;
      }
    }
    ++s.plays;
    s.max_asks = std::max(s.max_asks, t.asks());
    s.eq_calls += t.eq_calls;
    s.all_freshness_verified = s.all_freshness_verified && t.freshness_verified;
    switch (t.verdict.kind) {
      case Verdict::Kind::ProverWins: ++s.prover_wins; break;
      case Verdict::Kind::WitnessDishonest: ++s.dishonest; break;
      case Verdict::Kind::IllegalOpponentMove: ++s.illegal; break;
      case Verdict::Kind::FuelExhausted: ++s.fuel_exhausted; break;
      case Verdict::Kind::IncompletePlay:
        if (script_ran_out)
          ++s.depth_limited;
        else
          ++s.incomplete;
        break;
    }
    if (opts.visit) opts.visit(t);
  }
  return s;
}

inline ExploreSummary explore_noeth_acc(const AccWitness& w, const Carrier& c, std::size_t fuel = kDefaultFuel,
                                        const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_noeth_acc(w, c, o, fuel); }, c, AskRule::Any, opts);
}

inline ExploreSummary explore_strict(const StrictWitness& w, const Carrier& c, std::size_t fuel = kDefaultFuel,
                                     const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_strict(w, c, o, fuel); }, c, AskRule::Fresh, opts);
}

inline ExploreSummary explore_set(const SetWitness& w, const Carrier& c, std::size_t fuel = kDefaultFuel,
                                  const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_strict(w, c, o, fuel); }, c, AskRule::Shrink, opts);
}

inline ExploreSummary explore_game(const GameWitness& w, const Carrier& c, std::size_t fuel = kDefaultFuel,
                                   const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_game(w, c, o, fuel); }, c, AskRule::Fresh, opts);
}

inline ExploreSummary explore_expose(const ExposeWitness& w, const Carrier& c, std::size_t fuel = kDefaultFuel,
                                     const ExploreOptions& opts = {}) {
  return explore([&](const Opponent& o) { return play_expose(w, c, o, fuel); }, c, AskRule::Any, opts);
}

}  // namespace noeth
