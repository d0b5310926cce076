#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noeth/error.hpp"
#include "noeth/value.hpp"

namespace noeth {

struct Capabilities {
  bool has_eq = false;
  bool has_enum = false;
  std::optional<std::size_t> size_bound;
  bool is_prop = false;
};

struct CarrierType;
using CarrierTypePtr = std::shared_ptr<const CarrierType>;

struct CarrierType {
  enum class Kind { Bool, Unit, Empty, Fin, Sum, Prod, Prop, Opaque };

  Kind kind = Kind::Unit;
  std::size_t n = 0;
  CarrierTypePtr first;
  CarrierTypePtr second;
};

enum class Equality { Equal, NotEqual };

inline std::string_view to_string(Equality e) { return e == Equality::Equal ? "Equal" : "NotEqual"; }

// Per-run counter of equality-decider invocations.
struct EqTally {
  std::size_t calls = 0;
};

namespace detail {

inline CarrierTypePtr make_type(CarrierType::Kind kind, std::size_t n = 0, CarrierTypePtr a = nullptr,
                                CarrierTypePtr b = nullptr) {
  return std::make_shared<const CarrierType>(CarrierType{kind, n, std::move(a), std::move(b)});
}

inline Capabilities caps_of(const CarrierType& t) {
  using K = CarrierType::Kind;
  Capabilities c;
  switch (t.kind) {
    case K::Bool: c = {true, true, 2, false}; break;
    case K::Unit: c = {true, true, 1, true}; break;
    case K::Empty: c = {true, true, 0, true}; break;
    case K::Fin: c = {true, true, t.n, t.n <= 1}; break;
    case K::Sum: {
      const auto a = caps_of(*t.first);
      const auto b = caps_of(*t.second);
      c.has_eq = a.has_eq && b.has_eq;
      c.has_enum = a.has_enum && b.has_enum;
      if (a.size_bound && b.size_bound) c.size_bound = *a.size_bound + *b.size_bound;
      c.is_prop = c.size_bound && *c.size_bound <= 1;
      break;
    }
    case K::Prod: {
      const auto a = caps_of(*t.first);
      const auto b = caps_of(*t.second);
      c.has_eq = a.has_eq && b.has_eq;
      c.has_enum = a.has_enum && b.has_enum;
      if (a.size_bound && b.size_bound) c.size_bound = *a.size_bound * *b.size_bound;
      c.is_prop = a.is_prop && b.is_prop;
      break;
    }
    case K::Prop: {
      const auto a = caps_of(*t.first);
      c.has_eq = a.has_eq;
      c.has_enum = a.has_enum;
      c.size_bound = a.size_bound ? std::min<std::size_t>(*a.size_bound, 1) : 1;
      c.is_prop = true;
      break;
    }
    case K::Opaque: {
      const auto a = caps_of(*t.first);
      c.size_bound = a.size_bound;
      break;
    }
  }
  return c;
}

inline std::vector<Value> all_values(const CarrierType& t) {
  using K = CarrierType::Kind;
  std::vector<Value> out;
  switch (t.kind) {
    case K::Bool: out = {Value::boolean(false), Value::boolean(true)}; break;
    case K::Unit: out = {Value::unit()}; break;
    case K::Empty: break;
    case K::Fin:
      for (std::size_t i = 0; i < t.n; ++i) out.push_back(Value::index(i));
      break;
    case K::Sum:
      for (auto& v : all_values(*t.first)) out.push_back(Value::left(std::move(v)));
      for (auto& v : all_values(*t.second)) out.push_back(Value::right(std::move(v)));
      break;
    case K::Prod: {
      const auto as = all_values(*t.first);
      const auto bs = all_values(*t.second);
      for (const auto& a : as)
        for (const auto& b : bs) out.push_back(Value::pair(a, b));
      break;
    }
    case K::Prop:
    case K::Opaque: out = all_values(*t.first); break;
  }
  return out;
}

inline bool well_typed(const CarrierType& t, const Value& v) {
  using K = CarrierType::Kind;
  using T = Value::Tag;
  switch (t.kind) {
    case K::Bool: return v.tag() == T::Index && v.as_index() < 2;
    case K::Unit: return v.tag() == T::Unit;
    case K::Empty: return false;
    case K::Fin: return v.tag() == T::Index && v.as_index() < t.n;
    case K::Sum:
      if (v.tag() == T::Left) return well_typed(*t.first, v.inner());
      if (v.tag() == T::Right) return well_typed(*t.second, v.inner());
      return false;
    case K::Prod:
      return v.tag() == T::Pair && well_typed(*t.first, v.first()) && well_typed(*t.second, v.second());
    case K::Prop:
    case K::Opaque: return well_typed(*t.first, v);
  }
  return false;
}

inline std::string format(const CarrierType& t, const Value& v) {
  using K = CarrierType::Kind;
  switch (t.kind) {
    case K::Bool: return v.as_index() ? "true" : "false";
    case K::Unit: return "()";
    case K::Empty: return "<empty>";
    case K::Fin: return std::to_string(v.as_index());
    case K::Sum: {
      // A unit payload is written as empty parentheses: left().
      const bool left = v.tag() == Value::Tag::Left;
      const auto& side = left ? *t.first : *t.second;
      const auto body = side.kind == K::Unit ? std::string() : format(side, v.inner());
      return (left ? "left(" : "right(") + body + ")";
    }
    case K::Prod: return "(" + format(*t.first, v.first()) + "," + format(*t.second, v.second()) + ")";
    case K::Prop:
    case K::Opaque: return format(*t.first, v);
  }
  return v.encoding();
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  CarrierTypePtr parse_all() {
    auto t = parse();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input in carrier spec");
    return t;
  }

 private:
  CarrierTypePtr parse() {
    using K = CarrierType::Kind;
    const std::size_t start = pos_;
    const auto word = read_word();
    if (word == "bool") return make_type(K::Bool);
    if (word == "unit") return make_type(K::Unit);
    if (word == "empty") return make_type(K::Empty);
    if (word == "fin") {
      expect(':');
      return make_type(K::Fin, read_number());
    }
    if (word == "sum" || word == "prod") {
      expect(':');
      auto a = parse();
      expect(',');
      auto b = parse();
      return make_type(word == "sum" ? K::Sum : K::Prod, 0, std::move(a), std::move(b));
    }
    if (word == "prop") {
      expect(':');
      return make_type(K::Prop, 0, parse());
    }
    if (word == "opaque") {
      expect(':');
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return make_type(K::Opaque, 0, make_type(K::Fin, read_number()));
      return make_type(K::Opaque, 0, parse());
    }
    throw ParseError(start, word.empty() ? "expected carrier kind" : "unknown carrier kind '" + std::string(word) + "'");
  }

  std::string_view read_word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t read_number() {
    const std::size_t start = pos_;
    std::size_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a natural number");
    return n;
  }

  void expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch) throw ParseError(pos_, std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class ValueParser {
 public:
  explicit ValueParser(std::string_view text) : text_(text) {}

  Value parse_all(const CarrierType& t) {
    auto v = parse(t);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input in value");
    return v;
  }

 private:
  Value parse(const CarrierType& t) {
    using K = CarrierType::Kind;
    skip_ws();
    const std::size_t start = pos_;
    switch (t.kind) {
      case K::Bool:
        if (consume("true")) return Value::boolean(true);
        if (consume("false")) return Value::boolean(false);
        throw ParseError(start, "expected true or false");
      case K::Unit:
        if (consume("()")) return Value::unit();
        throw ParseError(start, "expected ()");
      case K::Empty: throw ParseError(start, "the empty carrier has no values");
      case K::Fin: {
        std::size_t n = 0;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
          ++pos_;
        }
        if (pos_ == digits) throw ParseError(start, "expected an index");
        if (n >= t.n) throw ParseError(start, "index out of range for fin:" + std::to_string(t.n));
        return Value::index(n);
      }
      case K::Sum: {
        const bool is_left = consume("left(");
        if (!is_left && !consume("right(")) throw ParseError(start, "expected left(...) or right(...)");
        const auto& side = is_left ? *t.first : *t.second;
        skip_ws();
        Value inner = (side.kind == K::Unit && peek(')')) ? Value::unit() : parse(side);
        expect(')');
        return is_left ? Value::left(std::move(inner)) : Value::right(std::move(inner));
      }
      case K::Prod: {
        expect('(');
        auto a = parse(*t.first);
        expect(',');
        auto b = parse(*t.second);
        expect(')');
        return Value::pair(std::move(a), std::move(b));
      }
      case K::Prop:
      case K::Opaque: return parse(*t.first);
    }
    throw ParseError(start, "unparseable value");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(char ch) {
    skip_ws();
    if (!peek(ch)) throw ParseError(pos_, std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// An element universe. Immutable once built; copies share the equality-call
// counter used for instrumentation.
class Carrier {
 public:
  const std::string& spec() const noexcept { return spec_; }
  const Capabilities& caps() const noexcept { return caps_; }
  const std::vector<Value>& exclusions() const noexcept { return exclusions_; }
  const CarrierType& type() const noexcept { return *type_; }

  // Total number of value_eq invocations against this carrier (and its
  // carrier_without descendants) since it was parsed.
  std::uint64_t eq_call_count() const noexcept { return eq_calls_->load(std::memory_order_relaxed); }

  bool excludes(const Value& v) const {
    return std::find(exclusions_.begin(), exclusions_.end(), v) != exclusions_.end();
  }

  std::string describe() const {
    std::string out = spec_;
    for (const auto& x : exclusions_) out += " \\ " + detail::format(*type_, x);
    return out;
  }

 private:
  Carrier() = default;

  std::string spec_;
  Capabilities caps_;
  std::vector<Value> exclusions_;
  CarrierTypePtr type_;
  std::shared_ptr<std::atomic<std::uint64_t>> eq_calls_;

  friend Carrier carrier_from_spec(std::string_view spec);
  friend Carrier carrier_without(const Carrier& c, const Value& x);
  friend Equality value_eq(const Carrier& c, const Value& a, const Value& b, EqTally* tally);
};

inline Carrier carrier_from_spec(std::string_view spec) {
  Carrier c;
  c.type_ = detail::SpecParser(spec).parse_all();
  c.spec_ = std::string(spec);
  c.caps_ = detail::caps_of(*c.type_);
  c.eq_calls_ = std::make_shared<std::atomic<std::uint64_t>>(0);
  return c;
}

inline Carrier carrier_without(const Carrier& c, const Value& x) {
  if (c.excludes(x)) return c;
  Carrier out = c;
  out.exclusions_.push_back(x);
  if (out.caps_.size_bound && *out.caps_.size_bound > 0) --*out.caps_.size_bound;
  return out;
}

// The equality decider. Opaque carriers refuse, but the attempt is still
// counted so tests can assert that no code path asked.
inline Equality value_eq(const Carrier& c, const Value& a, const Value& b, EqTally* tally = nullptr) {
  c.eq_calls_->fetch_add(1, std::memory_order_relaxed);
  if (tally) ++tally->calls;
  if (!c.caps_.has_eq) throw Error(Errc::CapabilityMissing, "carrier '" + c.spec_ + "' has no equality decider");
  return a == b ? Equality::Equal : Equality::NotEqual;
}

// Every value of the underlying store, minus exclusions. This is what an
// opponent "knows"; it ignores the enumeration capability.
inline std::vector<Value> store_values(const Carrier& c) {
  auto all = detail::all_values(c.type());
  std::erase_if(all, [&](const Value& v) { return c.excludes(v); });
  return all;
}

inline std::vector<Value> enumerate(const Carrier& c) {
  if (!c.caps().has_enum) throw Error(Errc::CapabilityMissing, "carrier '" + c.spec() + "' is not enumerable");
  return store_values(c);
}

inline bool well_typed(const Carrier& c, const Value& v) { return detail::well_typed(c.type(), v); }

inline std::string format_value(const Carrier& c, const Value& v) { return detail::format(c.type(), v); }

inline Value parse_value(const Carrier& c, std::string_view text) {
  return detail::ValueParser(text).parse_all(c.type());
}

// Splits "a,(b,c),left(d)" at top-level commas.
inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<Value> parse_values(const Carrier& c, std::string_view text) {
  std::vector<Value> out;
  for (const auto& part : split_top_level(text)) out.push_back(parse_value(c, part));
  return out;
}

// The stated capabilities agree with what the enumerator actually produces.
inline bool capabilities_consistent(const Carrier& c) {
  if (!c.caps().has_enum) return true;
  const auto n = store_values(c).size();
  if (c.caps().is_prop && n > 1) return false;
  if (c.caps().size_bound && n > *c.caps().size_bound) return false;
  return true;
}

}  // namespace noeth
