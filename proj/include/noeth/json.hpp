#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/transcript.hpp"

namespace noeth {

using Json = nlohmann::ordered_json;

inline Json to_json(const DupEvidence& e) { return {{"kind", "dup"}, {"t_early", e.t_early}, {"t_late", e.t_late}}; }
inline Json to_json(const RelEvidence& e) { return {{"kind", "rel"}, {"t_from", e.t_from}, {"t_to", e.t_to}}; }

inline Json to_json(const CompletenessReport& r) {
  return {{"kind", "completeness"}, {"locations", r.locations}, {"audited", r.audited}};
}

inline Json to_json(const TotalityClaim& c) {
  if (c.kind == TotalityClaim::Kind::BaseTotal) return {{"kind", "totality"}, {"claim", "base_total"}};
  return {{"kind", "totality"}, {"claim", "constant"}, {"t_from", c.t_from}, {"t_to", c.t_to}};
}

inline Json to_json(const TranscriptEvidence& e) {
  return std::visit(
      [](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::monostate>)
          return nullptr;
        else
          return to_json(x);
      },
      e);
}

inline TranscriptEvidence evidence_from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "dup") return DupEvidence{j.at("t_early").get<std::size_t>(), j.at("t_late").get<std::size_t>()};
  if (kind == "rel") return RelEvidence{j.at("t_from").get<std::size_t>(), j.at("t_to").get<std::size_t>()};
  if (kind == "completeness")
    return CompletenessReport{j.at("locations").get<std::vector<std::size_t>>(), j.at("audited").get<bool>()};
  if (kind == "totality") {
    if (j.at("claim").get<std::string>() == "base_total") return TotalityClaim::base_total();
    return TotalityClaim::constant(j.at("t_from").get<std::size_t>(), j.at("t_to").get<std::size_t>());
  }
  throw Error(Errc::ParseError, "unknown evidence kind '" + kind + "'");
}

// Values are rendered in the carrier's value syntax.
inline Json to_json(const Transcript& t, const Carrier& c) {
  Json moves = Json::array();
  for (const auto& m : t.moves)
    moves.push_back({{m.kind == Move::Kind::Ask ? "ask" : "tell", format_value(c, m.value)}});
  return {{"moves", std::move(moves)},        {"evidence", to_json(t.evidence)},
          {"verdict", to_string(t.verdict)},  {"fuel_used", t.fuel_used},
          {"freshness_verified", t.freshness_verified}, {"eq_calls", t.eq_calls}};
}

inline Transcript transcript_from_json(const Json& j, const Carrier& c) {
  Transcript t;
  for (const auto& m : j.at("moves")) {
    if (m.contains("ask"))
      t.moves.push_back({Move::Kind::Ask, parse_value(c, m.at("ask").get<std::string>())});
    else
      t.moves.push_back({Move::Kind::Tell, parse_value(c, m.at("tell").get<std::string>())});
  }
  t.evidence = evidence_from_json(j.at("evidence"));
  t.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  t.fuel_used = j.at("fuel_used").get<std::size_t>();
  t.freshness_verified = j.at("freshness_verified").get<bool>();
  t.eq_calls = j.at("eq_calls").get<std::size_t>();
  return t;
}

}  // namespace noeth
