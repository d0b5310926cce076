#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "noeth/af.hpp"
#include "noeth/carrier.hpp"
#include "noeth/convert.hpp"
#include "noeth/error.hpp"
#include "noeth/relation.hpp"
#include "noeth/witnesses.hpp"

namespace noeth {

enum class Encoding {
  Listable,
  Bounded,
  NoethAcc,
  NoethAccS,
  NoethSet,
  NoethGame,
  NoethExpose,
  Streamless,
  StreamlessS,
  AFEq,
  AF,
  NoethAccR,
};

inline std::string_view to_string(Encoding e) {
  switch (e) {
    case Encoding::Listable: return "Listable";
    case Encoding::Bounded: return "Bounded";
    case Encoding::NoethAcc: return "NoethAcc";
    case Encoding::NoethAccS: return "NoethAccS";
    case Encoding::NoethSet: return "NoethSet";
    case Encoding::NoethGame: return "NoethGame";
    case Encoding::NoethExpose: return "NoethExpose";
    case Encoding::Streamless: return "Streamless";
    case Encoding::StreamlessS: return "StreamlessS";
    case Encoding::AFEq: return "AFEq";
    case Encoding::AF: return "AF";
    case Encoding::NoethAccR: return "NoethAccR";
  }
  return "?";
}

inline std::optional<Encoding> encoding_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Encoding::NoethAccR); ++i) {
    const auto e = static_cast<Encoding>(i);
    if (to_string(e) == s) return e;
  }
  return std::nullopt;
}

using AnyWitness = std::variant<ListableWitness, BoundedWitness, AccWitness, StrictWitness, SetWitness, GameWitness,
                                ExposeWitness, AfWitness, RelAccWitness>;

struct NamedWitness {
  std::string name;
  Encoding encoding;
  std::optional<std::size_t> depth;  // longest play in asks, when known statically
  AnyWitness witness;
  Carrier carrier;                   // the carrier the witness is played on
};

namespace detail {

inline void require_eq(const Carrier& c, std::string_view builder) {
  if (!c.caps().has_eq)
    throw Error(Errc::CapabilityMissing, std::string(builder) + " needs an equality decider on '" + c.spec() + "'");
}

inline bool two_valued(const Carrier& c) {
  const auto& t = c.type();
  return t.kind == CarrierType::Kind::Bool || (t.kind == CarrierType::Kind::Fin && t.n == 2);
}

inline AccWitness listable_pipeline(const Carrier& c) {
  return bounded_to_noeth_acc(listable_to_bounded(listable_from_enum(c)));
}

}  // namespace detail

// Built-in witnesses by name. Everything in the duplicate-seeking family
// requires the equality decider, so opaque carriers are refused.
inline NamedWitness build_named(std::string_view name, const Carrier& c) {
  const std::string n(name);
  const auto size = c.caps().size_bound;
  auto plus = [](std::optional<std::size_t> s, std::size_t k) -> std::optional<std::size_t> {
    if (s) return *s + k;
    return std::nullopt;
  };

  if (name == "bool-acc") {
    detail::require_eq(c, n);
    if (!detail::two_valued(c)) throw Error(Errc::NotAMember, "bool-acc only answers two-valued carriers");
    return {n, Encoding::NoethAcc, 3, build_bool_noeth_acc(), c};
  }
  if (name == "from-listable") {
    detail::require_eq(c, n);
    return {n, Encoding::NoethAcc, plus(size, 1), detail::listable_pipeline(c), c};
  }
  if (name == "eager") return {n, Encoding::NoethAcc, plus(size, 1), eager_noeth_acc(c), c};
  if (name == "listable") {
    detail::require_eq(c, n);
    return {n, Encoding::Listable, 0, listable_from_enum(c), c};
  }
  if (name == "bounded") {
    detail::require_eq(c, n);
    return {n, Encoding::Bounded, plus(size, 1), listable_to_bounded(listable_from_enum(c)), c};
  }
  if (name == "expose-listable") {
    detail::require_eq(c, n);
    return {n, Encoding::NoethExpose, 0, listable_to_expose(listable_from_enum(c)), c};
  }
  if (name == "expose-prop") return {n, Encoding::NoethExpose, 1, expose_from_prop(c), c};
  if (name == "maybe-prop-bounded") {
    const auto& t = c.type();
    if (t.kind == CarrierType::Kind::Sum && t.first->kind == CarrierType::Kind::Unit &&
        c.spec().starts_with("sum:unit,")) {
      const auto inner = carrier_from_spec(std::string_view(c.spec()).substr(9));
      return {n, Encoding::Bounded, 3, maybe_prop_bounded(inner), c};
    }
    return {n, Encoding::Bounded, 3, maybe_prop_bounded(c), maybe_prop_carrier(c)};
  }
  if (name.starts_with("strict-bound:")) {
    const auto digits = name.substr(13);
    std::size_t bound = 0;
    if (digits.empty()) throw ParseError(13, "expected a bound");
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw ParseError(13 + i, "expected a bound");
      bound = bound * 10 + static_cast<std::size_t>(digits[i] - '0');
    }
    return {n, Encoding::NoethAccS, bound + 1, strict_from_bound(bound), c};
  }
  if (name == "af-eq") {
    detail::require_eq(c, n);
    return {n, Encoding::AFEq, plus(size, 1), noeth_acc_to_afeq(detail::listable_pipeline(c)), c};
  }
  if (name == "af-total") return {n, Encoding::AF, 0, af_total(), c};
  throw Error(Errc::UnknownName, "unknown witness '" + n + "'");
}

}  // namespace noeth
