#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/value.hpp"

namespace noeth {

// A decidable base predicate together with a stack of pivots (oldest
// first). With pivots x_1..x_k the effective relation is
//   R_k(y, z) = R_{k-1}(y, z) or R_{k-1}(x_k, y),   R_0 = base.
class Relation {
 public:
  using Predicate = std::function<bool(const Value&, const Value&)>;

  Relation(std::string name, Predicate base)
      : name_(std::move(name)), base_(std::make_shared<const Predicate>(std::move(base))) {}

  const std::string& name() const noexcept { return name_; }
  std::span<const Value> pivots() const noexcept { return pivots_; }

  bool base(const Value& y, const Value& z) const { return (*base_)(y, z); }

  Relation extended(Value pivot) const {
    Relation out = *this;
    out.pivots_.push_back(std::move(pivot));
    return out;
  }

  // The base relation alone, pivots dropped.
  Relation base_only() const {
    Relation out = *this;
    out.pivots_.clear();
    return out;
  }

 private:
  std::string name_;
  std::shared_ptr<const Predicate> base_;
  std::vector<Value> pivots_;
};

namespace detail {

inline bool eval_at_level(const Relation& rel, std::size_t level, const Value& y, const Value& z) {
  if (level == 0) return rel.base(y, z);
  return eval_at_level(rel, level - 1, y, z) || eval_at_level(rel, level - 1, rel.pivots()[level - 1], y);
}

}  // namespace detail

inline bool eval_relation(const Relation& rel, const Value& y, const Value& z) {
  return detail::eval_at_level(rel, rel.pivots().size(), y, z);
}

namespace relations {

inline Relation equality() {
  return Relation("eq", [](const Value& a, const Value& b) { return a == b; });
}

inline Relation total() {
  return Relation("total", [](const Value&, const Value&) { return true; });
}

inline Relation empty() {
  return Relation("empty", [](const Value&, const Value&) { return false; });
}

namespace detail {

// Rank of each value in the carrier's canonical order.
inline std::shared_ptr<const std::map<Value, std::size_t>> ranks(const Carrier& c) {
  auto out = std::make_shared<std::map<Value, std::size_t>>();
  std::size_t i = 0;
  for (auto& v : noeth::detail::all_values(c.type())) out->emplace(std::move(v), i++);
  return out;
}

}  // namespace detail

inline Relation same_parity(const Carrier& c) {
  auto rank = detail::ranks(c);
  return Relation("parity", [rank](const Value& a, const Value& b) {
    const auto ia = rank->find(a);
    const auto ib = rank->find(b);
    return ia != rank->end() && ib != rank->end() && ia->second % 2 == ib->second % 2;
  });
}

inline Relation leq(const Carrier& c) {
  auto rank = detail::ranks(c);
  return Relation("leq", [rank](const Value& a, const Value& b) {
    const auto ia = rank->find(a);
    const auto ib = rank->find(b);
    return ia != rank->end() && ib != rank->end() && ia->second <= ib->second;
  });
}

// Relation descriptors: eq | total | empty | parity | leq.
inline Relation from_spec(std::string_view name, const Carrier& c) {
  if (name == "eq") return equality();
  if (name == "total") return total();
  if (name == "empty") return empty();
  if (name == "parity") return same_parity(c);
  if (name == "leq") return leq(c);
  throw Error(Errc::UnknownName, "unknown relation '" + std::string(name) + "'");
}

}  // namespace relations

}  // namespace noeth
