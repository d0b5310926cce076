#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

struct StopRun {
  DupEvidence evidence;
  std::size_t depth = 0;
  Accumulator acc;
};

// Descend a duplicate-seeking witness, answering iteration t with feed(t).
inline StopRun run_to_stop(const AccWitness& w, const std::function<Value(std::size_t)>& feed,
                           std::size_t fuel = kDefaultFuel) {
  StopRun run;
  AccWitness cur = w;
  for (std::size_t visits = 0;; ++visits) {
    if (visits >= fuel) throw Error(Errc::FuelExhausted, "witness did not stop within " + std::to_string(fuel) + " visits");
    if (const auto* stop = std::get_if<AccWitness::Stop>(&cur.node())) {
      const auto& e = stop->evidence;
      if (run.acc.size() < 2 || !(e.t_early < e.t_late && e.t_late < run.acc.size()))
        throw Error(Errc::DishonestWitness, "stop evidence (" + std::to_string(e.t_early) + "," +
                                                std::to_string(e.t_late) + ") does not fit an accumulator of length " +
                                                std::to_string(run.acc.size()));
      run.evidence = e;
      run.depth = run.acc.size();
      return run;
    }
    Value v = feed(run.acc.size());
    run.acc.push_back(v);
    cur = std::get<AccWitness::Ask>(cur.node()).next(v);
  }
}

struct DecisionTrace {
  Equality answer = Equality::NotEqual;
  StopRun constant_run;  // fed x everywhere
  StopRun probe_run;     // fed y at iteration t1, x elsewhere
};

// Equality decider read off a duplicate-seeking witness, consulting nothing
// but the witness. Sound for honest, extensional witnesses: if x and y are
// the same element both runs coincide; otherwise honesty forbids the probe
// run's evidence from touching the iteration where y was fed.
class ExtractedDecider {
 public:
  ExtractedDecider(AccWitness w, std::size_t fuel) : witness_(std::move(w)), fuel_(fuel) {}

  DecisionTrace trace(const Value& x, const Value& y) const {
    DecisionTrace out;
    out.constant_run = run_to_stop(witness_, [&](std::size_t) { return x; }, fuel_);
    const std::size_t t1 = out.constant_run.evidence.t_early;
    out.probe_run = run_to_stop(witness_, [&](std::size_t t) { return t == t1 ? y : x; }, fuel_);
    const auto& e = out.probe_run.evidence;
    out.answer = (e.t_early == t1 || e.t_late == t1) ? Equality::Equal : Equality::NotEqual;
    return out;
  }

  Equality operator()(const Value& x, const Value& y) const { return trace(x, y).answer; }

 private:
  AccWitness witness_;
  std::size_t fuel_;
};

inline ExtractedDecider extract_decider(const AccWitness& w, std::size_t fuel = kDefaultFuel) {
  return ExtractedDecider(w, fuel);
}

}  // namespace noeth
