#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/relation.hpp"
#include "noeth/value.hpp"

namespace noeth {

// Values in feed order: iteration 0 is the first element asked or told.
// In head-cons form (newest first) position i of a length-L accumulator is
// iteration L-1-i; see head_cons_position.
using Accumulator = std::vector<Value>;

inline std::size_t head_cons_position(std::size_t iteration, std::size_t length) { return length - 1 - iteration; }

// Claims the elements fed at two iterations are equal.
struct DupEvidence {
  std::size_t t_early = 0;
  std::size_t t_late = 0;
  friend bool operator==(const DupEvidence&, const DupEvidence&) = default;
};

// Claims R(elem@t_from, elem@t_to): the older element relates to the newer.
struct RelEvidence {
  std::size_t t_from = 0;
  std::size_t t_to = 0;
  friend bool operator==(const RelEvidence&, const RelEvidence&) = default;
};

struct MemEvidence {
  std::size_t index = 0;
  friend bool operator==(const MemEvidence&, const MemEvidence&) = default;
};

// Why an effective relation is total at an almost-full leaf: either the
// base relation is total, or the unfolded extension contains the constant
// disjunct base(pivot@t_from, pivot@t_to).
struct TotalityClaim {
  enum class Kind { BaseTotal, ConstantDisjunct };

  Kind kind = Kind::BaseTotal;
  std::size_t t_from = 0;
  std::size_t t_to = 0;

  static TotalityClaim base_total() { return {}; }
  static TotalityClaim constant(std::size_t from, std::size_t to) { return {Kind::ConstantDisjunct, from, to}; }
  friend bool operator==(const TotalityClaim&, const TotalityClaim&) = default;
};

enum class Validity { Valid, Invalid, Unverifiable };

inline std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::Valid: return "Valid";
    case Validity::Invalid: return "Invalid";
    case Validity::Unverifiable: return "Unverifiable";
  }
  return "?";
}

inline Validity validate_dup(const Carrier& c, std::span<const Value> acc, const DupEvidence& e,
                             EqTally* tally = nullptr) {
  if (!(e.t_early < e.t_late && e.t_late < acc.size())) return Validity::Invalid;
  if (!c.caps().has_eq) return Validity::Unverifiable;
  return value_eq(c, acc[e.t_early], acc[e.t_late], tally) == Equality::Equal ? Validity::Valid : Validity::Invalid;
}

inline Validity validate_mem(const Carrier& c, std::span<const Value> acc, const MemEvidence& e, const Value& claimed,
                             EqTally* tally = nullptr) {
  if (e.index >= acc.size()) return Validity::Invalid;
  if (!c.caps().has_eq) return Validity::Unverifiable;
  return value_eq(c, acc[e.index], claimed, tally) == Equality::Equal ? Validity::Valid : Validity::Invalid;
}

inline Validity validate_dup_r(const Relation& rel, std::span<const Value> acc, const RelEvidence& e) {
  if (e.t_from >= acc.size() || e.t_to >= acc.size())
    throw Error(Errc::IndexOutOfRange, "relation evidence (" + std::to_string(e.t_from) + "," +
                                           std::to_string(e.t_to) + ") outside accumulator of length " +
                                           std::to_string(acc.size()));
  if (e.t_from >= e.t_to) return Validity::Invalid;
  return eval_relation(rel, acc[e.t_from], acc[e.t_to]) ? Validity::Valid : Validity::Invalid;
}

inline RelEvidence to_rel(const DupEvidence& e) { return {e.t_early, e.t_late}; }
inline DupEvidence to_dup(const RelEvidence& e) { return {e.t_from, e.t_to}; }

// Lexicographically least (t_early, t_late) pair of equal elements.
inline std::optional<DupEvidence> scan_for_dup(const Carrier& c, std::span<const Value> acc, EqTally* tally = nullptr) {
  if (!c.caps().has_eq) throw Error(Errc::CapabilityMissing, "duplicate scan needs an equality decider");
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = i + 1; j < acc.size(); ++j)
      if (value_eq(c, acc[i], acc[j], tally) == Equality::Equal) return DupEvidence{i, j};
  return std::nullopt;
}

// Pigeonhole search: index_of maps values into [0, bound). Returns the
// lexicographically least pair sharing an index. Never compares values.
inline DupEvidence pigeonhole_dup(std::span<const Value> acc, const std::function<std::size_t(const Value&)>& index_of,
                                  std::size_t bound) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first(bound, kNone);
  std::vector<std::size_t> second(bound, kNone);
  for (std::size_t t = 0; t < acc.size(); ++t) {
    const std::size_t bucket = index_of(acc[t]);
    if (bucket >= bound)
      throw Error(Errc::PigeonholeViolated, "index " + std::to_string(bucket) + " not below bound " +
                                                std::to_string(bound));
    if (first[bucket] == kNone)
      first[bucket] = t;
    else if (second[bucket] == kNone)
      second[bucket] = t;
  }
  std::optional<DupEvidence> best;
  for (std::size_t b = 0; b < bound; ++b) {
    if (second[b] == kNone) continue;
    if (!best || first[b] < best->t_early) best = DupEvidence{first[b], second[b]};
  }
  if (!best)
    throw Error(Errc::PigeonholeViolated, "no collision among " + std::to_string(acc.size()) + " values in " +
                                              std::to_string(bound) + " buckets");
  return *best;
}

}  // namespace noeth
