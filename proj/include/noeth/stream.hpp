#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "noeth/carrier.hpp"
#include "noeth/decider.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

// Infinite sources are index functions, so any position can be replayed.
struct StreamSource {
  std::function<Value(std::size_t)> at;
};

// Once at(n) is empty it stays empty for every larger index.
struct ColistSource {
  std::function<std::optional<Value>(std::size_t)> at;
};

inline StreamSource constant_stream(Value v) {
  return {[v = std::move(v)](std::size_t) { return v; }};
}

inline StreamSource cycle_stream(std::vector<Value> period) {
  if (period.empty()) throw Error(Errc::ParseError, "cycle stream needs at least one value");
  auto p = std::make_shared<const std::vector<Value>>(std::move(period));
  return {[p](std::size_t i) { return (*p)[i % p->size()]; }};
}

// A seeded, eventually periodic stream over the carrier's store: a random
// prefix followed by a random cycle.
inline StreamSource seeded_stream(const Carrier& c, std::uint64_t seed) {
  const auto store = store_values(c);
  if (store.empty()) throw Error(Errc::CapabilityMissing, "no stream exists over an empty carrier");
  std::mt19937_64 rng(seed);
  const std::size_t prefix_len = rng() % 6;
  const std::size_t period_len = 1 + rng() % 5;
  std::vector<Value> prefix, period;
  for (std::size_t i = 0; i < prefix_len; ++i) prefix.push_back(store[rng() % store.size()]);
  for (std::size_t i = 0; i < period_len; ++i) period.push_back(store[rng() % store.size()]);
  auto pre = std::make_shared<const std::vector<Value>>(std::move(prefix));
  auto cyc = std::make_shared<const std::vector<Value>>(std::move(period));
  return {[pre, cyc](std::size_t i) { return i < pre->size() ? (*pre)[i] : (*cyc)[(i - pre->size()) % cyc->size()]; }};
}

inline ColistSource finite_colist(std::vector<Value> items) {
  auto p = std::make_shared<const std::vector<Value>>(std::move(items));
  return {[p](std::size_t i) -> std::optional<Value> {
    if (i < p->size()) return (*p)[i];
    return std::nullopt;
  }};
}

// Stream descriptors: const:<v> | cycle:<v1,v2,...> | seeded:<seed>.
inline StreamSource stream_from_spec(std::string_view spec, const Carrier& c) {
  auto body = [&](std::string_view prefix) { return spec.substr(prefix.size()); };
  if (spec.starts_with("const:")) return constant_stream(parse_value(c, body("const:")));
  if (spec.starts_with("cycle:")) return cycle_stream(parse_values(c, body("cycle:")));
  if (spec.starts_with("seeded:")) {
    const auto digits = body("seeded:");
    std::uint64_t seed = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw ParseError(7 + i, "expected a seed");
      seed = seed * 10 + static_cast<std::uint64_t>(digits[i] - '0');
    }
    if (digits.empty()) throw ParseError(7, "expected a seed");
    return seeded_stream(c, seed);
  }
  throw ParseError(0, "unknown stream descriptor '" + std::string(spec) + "'");
}

// Evidence indices are stream positions.
inline DupEvidence acc_to_streamless(const AccWitness& w, const StreamSource& s, std::size_t fuel = kDefaultFuel) {
  return run_to_stop(w, s.at, fuel).evidence;
}

struct StreamlessSResult {
  enum class Kind { FiniteLength, SourceNotDupFree, WitnessDishonest };

  Kind kind = Kind::FiniteLength;
  std::size_t length = 0;  // meaningful for FiniteLength
  Accumulator prefix;      // elements consumed
  std::size_t eq_calls = 0;
};

inline std::string_view to_string(StreamlessSResult::Kind k) {
  switch (k) {
    case StreamlessSResult::Kind::FiniteLength: return "FiniteLength";
    case StreamlessSResult::Kind::SourceNotDupFree: return "SourceNotDupFree";
    case StreamlessSResult::Kind::WitnessDishonest: return "WitnessDishonest";
  }
  return "?";
}

// Feed the colist into a strict witness as fresh answers. Running out of
// source is the finite-length certificate; reaching Absurd means either the
// source repeated itself or the witness lied.
inline StreamlessSResult strict_to_streamless_s(const StrictWitness& w, const ColistSource& cs, const Carrier& c,
                                                std::size_t fuel = kDefaultFuel) {
  StreamlessSResult out;
  StrictWitness cur = w;
  for (std::size_t visits = 0;; ++visits) {
    if (visits >= fuel) throw Error(Errc::FuelExhausted, "strict witness did not finish within fuel");
    if (cur.holds<StrictWitness::Absurd>()) {
      out.kind = StreamlessSResult::Kind::WitnessDishonest;
      if (c.caps().has_eq) {
        EqTally tally;
        if (scan_for_dup(c, out.prefix, &tally)) out.kind = StreamlessSResult::Kind::SourceNotDupFree;
        out.eq_calls = tally.calls;
      }
      return out;
    }
    auto v = cs.at(out.prefix.size());
    if (!v) {
      out.kind = StreamlessSResult::Kind::FiniteLength;
      out.length = out.prefix.size();
      return out;
    }
    out.prefix.push_back(*v);
    try {
      cur = std::get<StrictWitness::Ask>(cur.node()).next(*v);
    } catch (const std::exception&) {
      out.kind = StreamlessSResult::Kind::WitnessDishonest;
      return out;
    }
  }
}

}  // namespace noeth
