#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noeth/af.hpp"
#include "noeth/carrier.hpp"
#include "noeth/convert.hpp"
#include "noeth/decider.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/games.hpp"
#include "noeth/relation.hpp"
#include "noeth/stream.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

struct CheckOptions {
  std::size_t size_limit = 4;
  std::size_t fuel = kDefaultFuel;
  bool parallel = true;
};

struct Cell {
  std::string from;
  std::string to;
  std::string result;                  // verified | failed:<why> | separated:<label> | skipped:<capability> | open
  std::optional<std::string> reverse;  // label of the converse arrow
  std::string note;
  std::size_t plays = 0;
  std::size_t dishonest = 0;

  bool implemented() const { return result == "verified" || result.starts_with("failed") || result.starts_with("skipped"); }
};

struct Matrix {
  std::string carrier;
  std::vector<Cell> cells;

  bool ok() const {
    return std::none_of(cells.begin(), cells.end(), [](const Cell& c) { return c.result.starts_with("failed"); });
  }
  std::size_t dishonest() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.dishonest;
    return n;
  }
};

// Converse arrows that need a nonconstructive principle, or are unresolved.
struct Separation {
  std::string_view from;
  std::string_view to;
  std::string_view label;
  std::string_view note;
};

inline const std::vector<Separation>& separations() {
  static const std::vector<Separation> table{
      {"NoethExpose", "Listable", "LEM_prop", "without an inhabitant"},
      {"Bounded", "Listable", "LEM_prop", ""},
      {"NoethExpose", "Bounded", "LPO", ""},
      {"Bounded", "NoethExpose", "LEM_prop", ""},
      {"NoethAcc", "Bounded", "LPO", ""},
      {"NoethAcc", "NoethExpose", "LEM_prop", ""},
      {"NoethAccS", "NoethAcc", "DEQ", ""},
      {"Streamless", "NoethAcc", "conjectured", "no constructive proof known"},
      {"NoethGame", "NoethAccS", "open", "unresolved"},
  };
  return table;
}

inline std::optional<std::string> separation_label(std::string_view from, std::string_view to) {
  for (const auto& s : separations())
    if (s.from == from && s.to == to) return std::string(s.label);
  return std::nullopt;
}

namespace detail {

struct Sources {
  Carrier carrier;
  std::size_t fuel;

  ListableWitness listable() const { return listable_from_enum(carrier); }
  BoundedWitness bounded() const { return listable_to_bounded(listable()); }
  AccWitness acc() const { return bounded_to_noeth_acc(bounded()); }
  ExposeWitness expose() const { return listable_to_expose(listable()); }

  // Enumerable carriers go through the listable pipeline; otherwise a size
  // bound is trusted.
  StrictWitness strict() const {
    if (carrier.caps().has_enum) return acc_to_strict(acc());
    if (!carrier.caps().size_bound) throw Error(Errc::CapabilityMissing, "carrier has neither enumeration nor size bound");
    return strict_from_bound(*carrier.caps().size_bound);
  }

  void require_enum() const {
    if (!carrier.caps().has_enum) throw Error(Errc::CapabilityMissing, "carrier has no enumeration");
  }

  ExploreOptions explore_opts() const { return {store_values(carrier).size() + 4, {}}; }
};

inline void absorb(Cell& cell, const ExploreSummary& s) {
  cell.plays += s.plays;
  cell.dishonest += s.dishonest;
  if (!s.all_won() && cell.result == "verified") {
    cell.result = "failed:" + std::to_string(s.plays - s.prover_wins) + "/" + std::to_string(s.plays) + " plays lost";
  }
}

inline void tally(Cell& cell, bool ok, const std::string& what) {
  ++cell.plays;
  if (!ok) {
    ++cell.dishonest;
    if (cell.result == "verified") cell.result = "failed:" + what;
  }
}

// All sequences of `length` over `pool`, or only injective ones.
inline void for_each_sequence(const std::vector<Value>& pool, std::size_t length, bool injective,
                              const std::function<void(const std::vector<Value>&)>& f) {
  std::vector<Value> cur;
  std::vector<bool> used(pool.size(), false);
  std::function<void()> rec = [&] {
    if (cur.size() == length) {
      f(cur);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (injective && used[i]) continue;
      used[i] = true;
      cur.push_back(pool[i]);
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  rec();
}

using Verifier = std::function<void(const Sources&, Cell&)>;

struct Arrow {
  std::string_view from;
  std::string_view to;
  std::optional<std::string_view> reverse;
  std::string_view note;
  Verifier verify;
};

inline std::vector<Relation> af_relations(const Carrier& c) {
  return {relations::equality(), relations::total(), relations::same_parity(c)};
}

inline const std::vector<Arrow>& arrows() {
  static const std::vector<Arrow> table{
      {"NoethAcc", "NoethAccS", "DEQ", "",
       [](const Sources& s, Cell& cell) {
         s.require_enum();
         absorb(cell, explore_strict(acc_to_strict(s.acc()), s.carrier, s.fuel, s.explore_opts()));
       }},
      {"NoethAccS", "NoethSet", std::nullopt, "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_set(strict_to_set(s.strict()), s.carrier, s.fuel, s.explore_opts()));
       }},
      {"NoethSet", "NoethAccS", std::nullopt, "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_strict(set_to_strict(strict_to_set(s.strict())), s.carrier, s.fuel, s.explore_opts()));
       }},
      {"NoethAccS", "NoethGame", "open", "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_game(strict_to_game(s.strict()), s.carrier, s.fuel, s.explore_opts()));
       }},
      {"Listable", "NoethExpose", "LEM_prop", "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_expose(s.expose(), s.carrier, s.fuel, s.explore_opts()));
       }},
      {"NoethExpose", "Listable", std::nullopt, "given an inhabitant",
       [](const Sources& s, Cell& cell) {
         std::vector<ExposeWitness> sources{s.expose()};
         if (s.carrier.caps().is_prop) sources.push_back(expose_from_prop(s.carrier));
         const auto values = enumerate(s.carrier);
         for (const auto& src : sources) {
           for (const auto& x0 : values) {
             const auto l = expose_to_listable(src, x0, s.fuel);
             bool ok = true;
             for (const auto& v : values) ok = ok && validate_mem(s.carrier, l.items, l.locate(v), v) == Validity::Valid;
             tally(cell, ok, "listing from " + format_value(s.carrier, x0) + " is incomplete");
           }
         }
       }},
      {"NoethExpose", "NoethAcc", "LEM_prop", "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_noeth_acc(expose_to_acc(s.expose(), s.fuel), s.carrier, s.fuel, s.explore_opts()));
         if (s.carrier.caps().is_prop)
           absorb(cell, explore_noeth_acc(expose_to_acc(expose_from_prop(s.carrier), s.fuel), s.carrier, s.fuel,
                                          s.explore_opts()));
       }},
      {"Listable", "Bounded", "LEM_prop", "",
       [](const Sources& s, Cell& cell) {
         const auto b = s.bounded();
         const auto values = enumerate(s.carrier);
         for_each_sequence(values, b.bound, false, [&](const std::vector<Value>& list) {
           bool ok = false;
           try {
             ok = validate_dup(s.carrier, list, b.dup_finder(list)) == Validity::Valid;
           } catch (const Error&) {
           }
           tally(cell, ok, "no valid duplicate for a list of length " + std::to_string(b.bound));
         });
       }},
      {"Bounded", "NoethAcc", "LPO", "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_noeth_acc(s.acc(), s.carrier, s.fuel, s.explore_opts()));
       }},
      {"NoethAcc", "Streamless", "conjectured", "",
       [](const Sources& s, Cell& cell) {
         const auto w = s.acc();
         const auto values = enumerate(s.carrier);
         for_each_sequence(values, s.bounded().bound, false, [&](const std::vector<Value>& prefix) {
           const auto stream = cycle_stream(prefix);
           bool ok = false;
           try {
             const auto run = run_to_stop(w, stream.at, s.fuel);
             ok = validate_dup(s.carrier, run.acc, run.evidence) == Validity::Valid;
           } catch (const Error&) {
           }
           tally(cell, ok, "stream without validated duplicate");
         });
       }},
      {"NoethAccS", "StreamlessS", std::nullopt, "",
       [](const Sources& s, Cell& cell) {
         const auto w = s.strict();
         const auto pool = store_values(s.carrier);
         for (std::size_t len = 0; len <= pool.size(); ++len) {
           for_each_sequence(pool, len, true, [&](const std::vector<Value>& items) {
             bool ok = false;
             try {
               const auto r = strict_to_streamless_s(w, finite_colist(items), s.carrier, s.fuel);
               ok = r.kind == StreamlessSResult::Kind::FiniteLength && r.length == items.size() &&
                    r.length <= pool.size();
             } catch (const Error&) {
             }
             tally(cell, ok, "colist of length " + std::to_string(items.size()) + " not certified finite");
           });
         }
       }},
      {"NoethAcc", "AFEq", std::nullopt, "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_af(noeth_acc_to_afeq(s.acc()), s.carrier, relations::equality(), s.fuel, s.explore_opts()));
       }},
      {"AFEq", "NoethAcc", std::nullopt, "",
       [](const Sources& s, Cell& cell) {
         absorb(cell, explore_noeth_acc(afeq_to_noeth_acc(noeth_acc_to_afeq(s.acc())), s.carrier, s.fuel,
                                        s.explore_opts()));
       }},
      {"NoethAccR", "AF", std::nullopt, "relations eq, total, parity",
       [](const Sources& s, Cell& cell) {
         s.require_enum();
         for (const auto& rel : af_relations(s.carrier))
           absorb(cell, explore_af(noeth_acc_r_to_af(eager_noeth_acc_r(rel)), s.carrier, rel, s.fuel, s.explore_opts()));
       }},
      {"AF", "NoethAccR", std::nullopt, "relations eq, total, parity",
       [](const Sources& s, Cell& cell) {
         s.require_enum();
         for (const auto& rel : af_relations(s.carrier))
           absorb(cell, explore_noeth_acc_r(af_to_noeth_acc_r(noeth_acc_r_to_af(eager_noeth_acc_r(rel)), rel), s.carrier,
                                            rel, s.fuel, s.explore_opts()));
       }},
  };
  return table;
}

inline Cell run_arrow(const Arrow& a, const Sources& s) {
  Cell cell{std::string(a.from), std::string(a.to), "verified",
            a.reverse ? std::optional<std::string>(std::string(*a.reverse)) : std::nullopt, std::string(a.note)};
  try {
    a.verify(s, cell);
  } catch (const Error& e) {
    if (e.code() == Errc::CapabilityMissing) {
      cell.result = "skipped:CapabilityMissing";
    } else {
      cell.result = "failed:" + std::string(to_string(e.code()));
      if (e.code() == Errc::DishonestWitness) ++cell.dishonest;
    }
  }
  return cell;
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> implemented_arrows() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : detail::arrows()) out.emplace_back(a.from, a.to);
  return out;
}

// Verifies a single implemented arrow on a carrier. Throws UnknownName when
// no such arrow is implemented.
inline Cell check_arrow(std::string_view from, std::string_view to, const Carrier& c, const CheckOptions& opts = {}) {
  for (const auto& a : detail::arrows())
    if (a.from == from && a.to == to) return detail::run_arrow(a, {c, opts.fuel});
  throw Error(Errc::UnknownName, "no conversion from " + std::string(from) + " to " + std::string(to));
}

// Every implemented arrow is verified exhaustively on the carrier; struck
// arrows are listed with their labels and never run.
inline Matrix check_lattice(const Carrier& c, const CheckOptions& opts = {}) {
  const auto size = c.caps().size_bound;
  if (!size || *size > opts.size_limit)
    throw Error(Errc::SizeLimitExceeded, "carrier '" + c.spec() + "' exceeds the size limit " +
                                             std::to_string(opts.size_limit));
  const detail::Sources sources{c, opts.fuel};
  Matrix m{c.spec(), {}};
  const auto& table = detail::arrows();
  if (opts.parallel) {
    std::vector<std::future<Cell>> jobs;
    for (const auto& a : table)
      jobs.push_back(std::async(std::launch::async, [&a, &sources] { return detail::run_arrow(a, sources); }));
    for (auto& j : jobs) m.cells.push_back(j.get());
  } else {
    for (const auto& a : table) m.cells.push_back(detail::run_arrow(a, sources));
  }
  for (const auto& s : separations()) {
    Cell cell{std::string(s.from), std::string(s.to), s.label == "open" ? "open" : "separated:" + std::string(s.label),
              std::nullopt, std::string(s.note)};
    m.cells.push_back(std::move(cell));
  }
  return m;
}

}  // namespace noeth
