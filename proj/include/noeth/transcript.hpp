#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/value.hpp"

namespace noeth {

struct Move {
  enum class Kind { Ask, Tell };

  Kind kind = Kind::Ask;
  Value value;
  friend bool operator==(const Move&, const Move&) = default;
};

// Location of each enumerated value, in enumeration order.
struct CompletenessReport {
  std::vector<std::size_t> locations;
  bool audited = false;
  friend bool operator==(const CompletenessReport&, const CompletenessReport&) = default;
};

using TranscriptEvidence = std::variant<std::monostate, DupEvidence, RelEvidence, CompletenessReport, TotalityClaim>;

struct Verdict {
  enum class Kind { ProverWins, WitnessDishonest, IllegalOpponentMove, FuelExhausted, IncompletePlay };
  enum class Reason { None, EvidenceValidated, OpponentExhausted };

  Kind kind = Kind::IncompletePlay;
  Reason reason = Reason::None;

  static Verdict prover_wins(Reason r) { return {Kind::ProverWins, r}; }
  static Verdict of(Kind k) { return {k, Reason::None}; }

  bool prover_won() const noexcept { return kind == Kind::ProverWins; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::ProverWins:
      return v.reason == Verdict::Reason::OpponentExhausted ? "ProverWins:OpponentExhausted"
                                                            : "ProverWins:EvidenceValidated";
    case Verdict::Kind::WitnessDishonest: return "WitnessDishonest";
    case Verdict::Kind::IllegalOpponentMove: return "IllegalOpponentMove";
    case Verdict::Kind::FuelExhausted: return "FuelExhausted";
    case Verdict::Kind::IncompletePlay: return "IncompletePlay";
  }
  return "?";
}

inline Verdict verdict_from_string(std::string_view s) {
  using K = Verdict::Kind;
  if (s == "ProverWins:OpponentExhausted") return Verdict::prover_wins(Verdict::Reason::OpponentExhausted);
  if (s == "ProverWins:EvidenceValidated") return Verdict::prover_wins(Verdict::Reason::EvidenceValidated);
  if (s == "WitnessDishonest") return Verdict::of(K::WitnessDishonest);
  if (s == "IllegalOpponentMove") return Verdict::of(K::IllegalOpponentMove);
  if (s == "FuelExhausted") return Verdict::of(K::FuelExhausted);
  if (s == "IncompletePlay") return Verdict::of(K::IncompletePlay);
  throw Error(Errc::ParseError, "unknown verdict '" + std::string(s) + "'");
}

// Full record of one prover-opponent play.
struct Transcript {
  std::vector<Move> moves;
  TranscriptEvidence evidence;
  Verdict verdict;
  std::size_t fuel_used = 0;
  // False as soon as any freshness or evidence check had to be trusted
  // because the carrier withholds equality.
  bool freshness_verified = true;
  std::size_t eq_calls = 0;

  Accumulator accumulator() const {
    Accumulator acc;
    acc.reserve(moves.size());
    for (const auto& m : moves) acc.push_back(m.value);
    return acc;
  }

  std::size_t asks() const {
    std::size_t n = 0;
    for (const auto& m : moves) n += m.kind == Move::Kind::Ask;
    return n;
  }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

}  // namespace noeth
