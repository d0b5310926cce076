#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noeth/noeth.hpp"

namespace noeth::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // dishonest witness, fuel exhausted, failed verification
  kRefused = 2,  // bad input, missing capability, separated conversion
  kIllegal = 3,
  kIncomplete = 4,
};

inline int exit_code(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::ProverWins: return kOk;
    case Verdict::Kind::WitnessDishonest:
    case Verdict::Kind::FuelExhausted: return kFailure;
    case Verdict::Kind::IllegalOpponentMove: return kIllegal;
    case Verdict::Kind::IncompletePlay: return kIncomplete;
  }
  return kFailure;
}

inline Opponent opponent_from_spec(std::string_view spec, const Carrier& c, std::uint64_t default_seed) {
  if (spec == "exhaustive") return Opponent::exhaustive();
  if (spec == "adversarial") return Opponent::adversarial();
  if (spec == "random") return Opponent::random(default_seed);
  if (spec.starts_with("random:")) {
    const auto digits = spec.substr(7);
    if (digits.empty()) throw ParseError(7, "expected a seed");
    std::uint64_t seed = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw ParseError(7 + i, "expected a seed");
      seed = seed * 10 + static_cast<std::uint64_t>(digits[i] - '0');
    }
    return Opponent::random(seed);
  }
  if (spec.starts_with("scripted:")) return Opponent::scripted(parse_values(c, spec.substr(9)));
  if (spec == "scripted") return Opponent::scripted({});
  throw ParseError(0, "unknown opponent '" + std::string(spec) + "'");
}

namespace detail {

struct Globals {
  std::size_t fuel = kDefaultFuel;
  std::uint64_t seed = 0;
  bool compact = false;
};

inline void emit(std::ostream& out, const Json& j, const Globals& g) {
  out << (g.compact ? j.dump() : j.dump(2)) << '\n';
}

inline Json error_json(const Error& e) {
  return {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
}

inline Json cell_json(const Cell& c) {
  Json j{{"from", c.from}, {"to", c.to}, {"result", c.result}};
  if (c.reverse) j["reverse"] = *c.reverse;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.implemented()) {
    j["plays"] = c.plays;
    j["dishonest"] = c.dishonest;
  }
  return j;
}

// Decider input: any witness that converts to the duplicate-seeking form.
inline AccWitness as_acc(const NamedWitness& nw, std::size_t fuel) {
  if (const auto* a = std::get_if<AccWitness>(&nw.witness)) return *a;
  if (const auto* b = std::get_if<BoundedWitness>(&nw.witness)) return bounded_to_noeth_acc(*b);
  if (const auto* l = std::get_if<ListableWitness>(&nw.witness)) return bounded_to_noeth_acc(listable_to_bounded(*l));
  if (const auto* e = std::get_if<ExposeWitness>(&nw.witness)) return expose_to_acc(*e, fuel);
  if (const auto* f = std::get_if<AfWitness>(&nw.witness)) {
    if (nw.encoding == Encoding::AFEq) return afeq_to_noeth_acc(*f);
  }
  throw Error(Errc::CapabilityMissing,
              "a " + std::string(to_string(nw.encoding)) + " witness does not yield an equality decider");
}

inline Transcript play_named(const NamedWitness& nw, const Opponent& o, const Relation& rel, bool as_set,
                             std::size_t fuel) {
  const Carrier& c = nw.carrier;
  return std::visit(
      [&](const auto& w) -> Transcript {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, AccWitness>) return play_noeth_acc(w, c, o, fuel);
        if constexpr (std::is_same_v<W, BoundedWitness>) return play_noeth_acc(bounded_to_noeth_acc(w), c, o, fuel);
        if constexpr (std::is_same_v<W, ListableWitness>) return play_expose(listable_to_expose(w), c, o, fuel);
        if constexpr (std::is_same_v<W, StrictWitness>) {
          if (as_set) return play_strict(strict_to_set(w), c, o, fuel);
          return play_strict(w, c, o, fuel);
        }
        if constexpr (std::is_same_v<W, SetWitness>) return play_strict(w, c, o, fuel);
        if constexpr (std::is_same_v<W, GameWitness>) return play_game(w, c, o, fuel);
        if constexpr (std::is_same_v<W, ExposeWitness>) return play_expose(w, c, o, fuel);
        if constexpr (std::is_same_v<W, AfWitness>) return play_af(w, c, rel, o, fuel);
        if constexpr (std::is_same_v<W, RelAccWitness>) return play_noeth_acc_r(w, c, rel, o, fuel);
      },
      nw.witness);
}

inline int cmd_build(const std::string& carrier, const std::string& name, const Globals& g, std::ostream& out) {
  const auto c = carrier_from_spec(carrier);
  const auto nw = build_named(name, c);
  Json j{{"name", nw.name}, {"encoding", std::string(to_string(nw.encoding))}};
  if (nw.depth)
    j["depth"] = *nw.depth;
  else
    j["depth"] = nullptr;
  j["carrier"] = nw.carrier.spec();
  emit(out, j, g);
  return kOk;
}

inline int cmd_play(const std::string& carrier, const std::string& name, const std::string& opponent,
                    const std::string& relation, bool as_set, const Globals& g, std::ostream& out) {
  const auto c = carrier_from_spec(carrier);
  const auto nw = build_named(name, c);
  const auto o = opponent_from_spec(opponent, nw.carrier, g.seed);
  const auto rel = nw.encoding == Encoding::AFEq ? relations::equality() : relations::from_spec(relation, nw.carrier);
  const auto t = play_named(nw, o, rel, as_set, g.fuel);
  Json j{{"witness", nw.name}, {"encoding", std::string(to_string(nw.encoding))}, {"carrier", nw.carrier.spec()},
         {"transcript", to_json(t, nw.carrier)}};
  emit(out, j, g);
  return exit_code(t.verdict);
}

inline int cmd_convert(const std::string& from, const std::string& to, const std::string& carrier, const Globals& g,
                       std::ostream& out) {
  for (const auto& name : {from, to})
    if (!encoding_from_string(name)) throw Error(Errc::UnknownName, "unknown encoding '" + name + "'");
  const auto c = carrier_from_spec(carrier);
  bool implemented = false;
  for (const auto& [f, t] : implemented_arrows()) implemented = implemented || (f == from && t == to);
  if (!implemented) {
    const auto label = separation_label(from, to).value_or("unsupported");
    const std::string result = label == "open" || label == "unsupported" ? label : "separated:" + label;
    emit(out, {{"from", from}, {"to", to}, {"result", result}, {"label", label}}, g);
    return kRefused;
  }
  CheckOptions opts;
  opts.fuel = g.fuel;
  const auto cell = check_arrow(from, to, c, opts);
  Json j = cell_json(cell);
  j["carrier"] = c.spec();
  emit(out, j, g);
  if (cell.result == "verified") return kOk;
  if (cell.result.starts_with("skipped")) return kRefused;
  return kFailure;
}

inline int cmd_decide(const std::string& carrier, const std::string& name, const Globals& g, std::ostream& out) {
  const auto c = carrier_from_spec(carrier);
  const auto nw = build_named(name, c);
  const auto decide = extract_decider(as_acc(nw, g.fuel), g.fuel);
  const auto values = enumerate(nw.carrier);
  Json names = Json::array();
  for (const auto& v : values) names.push_back(format_value(nw.carrier, v));
  const auto before = nw.carrier.eq_call_count();
  std::vector<std::vector<Equality>> table;
  for (const auto& x : values) {
    auto& row = table.emplace_back();
    for (const auto& y : values) row.push_back(decide(x, y));
  }
  const auto extraction_calls = nw.carrier.eq_call_count() - before;
  Json rows = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (auto e : row) r.push_back(std::string(to_string(e)));
    rows.push_back(std::move(r));
  }
  Json agrees = nullptr;
  if (nw.carrier.caps().has_eq) {
    bool same = true;
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = 0; j < values.size(); ++j)
        same = same && table[i][j] == value_eq(nw.carrier, values[i], values[j]);
    agrees = same;
  }
  Json j{{"witness", nw.name},          {"carrier", nw.carrier.spec()},  {"values", std::move(names)},
         {"table", std::move(rows)},    {"agrees_with_value_eq", agrees}, {"extraction_eq_calls", extraction_calls}};
  emit(out, j, g);
  return agrees.is_boolean() && !agrees.get<bool>() ? kFailure : kOk;
}

inline int cmd_check(const std::string& carrier, std::size_t size_limit, bool sequential, const Globals& g,
                     std::ostream& out) {
  const auto c = carrier_from_spec(carrier);
  CheckOptions opts;
  opts.fuel = g.fuel;
  opts.size_limit = size_limit;
  opts.parallel = !sequential;
  const auto m = check_lattice(c, opts);
  Json cells = Json::array();
  for (const auto& cell : m.cells) cells.push_back(cell_json(cell));
  emit(out, {{"carrier", m.carrier}, {"ok", m.ok()}, {"dishonest", m.dishonest()}, {"cells", std::move(cells)}}, g);
  return m.ok() ? kOk : kFailure;
}

}  // namespace detail

// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
  detail::Globals g;
  CLI::App app{"Executable Noetherian-set witnesses", "noeth"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fuel", g.fuel, "evaluation budget in node visits")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for the random opponent");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "compact single-line JSON output");

  std::string carrier = "bool", witness, opponent = "exhaustive", relation = "eq", from, to;
  std::size_t size_limit = 4;
  bool as_set = false, sequential = false;

  auto* build = app.add_subcommand("build", "build a named witness and describe it");
  build->add_option("--carrier", carrier)->required();
  build->add_option("--as", witness)->required();

  auto* play = app.add_subcommand("play", "play a named witness against an opponent");
  play->add_option("--carrier", carrier)->required();
  play->add_option("--witness", witness)->required();
  play->add_option("--opponent", opponent, "scripted:<v,...> | exhaustive | random[:seed] | adversarial");
  play->add_option("--relation", relation, "eq | total | empty | parity | leq");
  play->add_flag("--set", as_set, "play a strict witness by shrinking the carrier");

  auto* convert = app.add_subcommand("convert", "verify a conversion between encodings");
  convert->add_option("--from", from)->required();
  convert->add_option("--to", to)->required();
  convert->add_option("--carrier", carrier);

  auto* decide = app.add_subcommand("decide", "extract an equality decider from a witness");
  decide->add_option("--carrier", carrier)->required();
  decide->add_option("--witness", witness)->required();

  auto* check = app.add_subcommand("check", "verify the implication matrix on a carrier");
  check->add_option("carrier", carrier);
  check->add_option("--size-limit", size_limit)->capture_default_str();
  check->add_flag("--sequential", sequential, "verify cells one at a time");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    detail::emit(out, {{"error", "UsageError"}, {"message", e.what()}}, g);
    return kRefused;
  }
  g.compact = json_flag;

  try {
    if (build->parsed()) return detail::cmd_build(carrier, witness, g, out);
    if (play->parsed()) return detail::cmd_play(carrier, witness, opponent, relation, as_set, g, out);
    if (convert->parsed()) return detail::cmd_convert(from, to, carrier, g, out);
    if (decide->parsed()) return detail::cmd_decide(carrier, witness, g, out);
    if (check->parsed()) return detail::cmd_check(carrier, size_limit, sequential, g, out);
  } catch (const Error& e) {
    detail::emit(out, detail::error_json(e), g);
    return e.code() == Errc::DishonestWitness || e.code() == Errc::FuelExhausted ? kFailure : kRefused;
  }
  return kRefused;
}

}  // namespace noeth::cli
