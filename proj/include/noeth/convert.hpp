#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <variant>

#include "noeth/error.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

// Structural map. A Stop becomes Absurd: under fresh answers the
// accumulator never holds a duplicate, so an honest Stop is unreachable.
inline StrictWitness acc_to_strict(const AccWitness& w) {
  if (w.holds<AccWitness::Stop>()) return StrictWitness::absurd();
  auto next = std::get<AccWitness::Ask>(w.node()).next;
  return StrictWitness::ask([next](const Value& v) { return acc_to_strict(next(v)); });
}

// The strict and set encodings share one tree; only the evaluation
// discipline differs (accumulator freshness vs. carrier shrinking).
inline SetWitness strict_to_set(const StrictWitness& w) { return SetWitness(w); }
inline StrictWitness set_to_strict(const SetWitness& w) { return w.tree(); }

inline GameWitness strict_to_game(const StrictWitness& w) {
  if (w.holds<StrictWitness::Absurd>()) return GameWitness::absurd();
  auto next = std::get<StrictWitness::Ask>(w.node()).next;
  return GameWitness::ask([next](const Value& v) { return strict_to_game(next(v)); });
}

// Walk the tree answering x0 at every ask; the stop's completeness function
// locates every element in the accumulator built along the way.
inline ListableWitness expose_to_listable(const ExposeWitness& w, const Value& x0, std::size_t fuel = kDefaultFuel) {
  Accumulator acc;
  ExposeWitness cur = w;
  for (std::size_t visits = 0;; ++visits) {
    if (visits >= fuel) throw Error(Errc::FuelExhausted, "expose walk did not reach a stop");
    const auto& node = cur.node();
    if (const auto* stop = std::get_if<ExposeWitness::Stop>(&node)) return {std::move(acc), stop->locate};
    if (const auto* tell = std::get_if<ExposeWitness::Tell>(&node)) {
      acc.push_back(tell->value);
      cur = *tell->next;
      continue;
    }
    acc.push_back(x0);
    cur = std::get<ExposeWitness::Ask>(node).next(x0);
  }
}

// Ask once; the answer makes the carrier listable, and the listing yields a
// bounded chain. The first answer occupies iteration 0 of that chain.
inline AccWitness expose_to_acc(const ExposeWitness& w, std::size_t fuel = kDefaultFuel) {
  return AccWitness::ask([w, fuel](const Value& v) {
    auto bounded = std::make_shared<const BoundedWitness>(listable_to_bounded(expose_to_listable(w, v, fuel)));
    return detail::bounded_chain(std::move(bounded), Accumulator{v});
  });
}

}  // namespace noeth
