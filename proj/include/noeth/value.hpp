#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace noeth {

// One element of a carrier, in canonical form. Two values denote the same
// element iff they compare equal here; branch functions that only inspect
// this encoding are extensional for free.
class Value {
 public:
  enum class Tag : unsigned char { Unit, Index, Left, Right, Pair };

  Value() = default;

  static Value unit() { return {}; }
  static Value index(std::size_t i) {
    Value v;
    v.tag_ = Tag::Index;
    v.index_ = i;
    return v;
  }
  static Value boolean(bool b) { return index(b ? 1 : 0); }
  static Value left(Value inner) { return wrap(Tag::Left, std::move(inner)); }
  static Value right(Value inner) { return wrap(Tag::Right, std::move(inner)); }
  static Value pair(Value a, Value b) {
    Value v;
    v.tag_ = Tag::Pair;
    v.children_.reserve(2);
    v.children_.push_back(std::move(a));
    v.children_.push_back(std::move(b));
    return v;
  }

  Tag tag() const noexcept { return tag_; }
  std::size_t as_index() const noexcept { return index_; }
  const Value& inner() const { return children_.at(0); }
  const Value& first() const { return children_.at(0); }
  const Value& second() const { return children_.at(1); }

  // Compact tag-prefixed rendering of the canonical form, for diagnostics.
  std::string encoding() const {
    switch (tag_) {
      case Tag::Unit: return "u";
      case Tag::Index: return "i" + std::to_string(index_);
      case Tag::Left: return "L(" + inner().encoding() + ")";
      case Tag::Right: return "R(" + inner().encoding() + ")";
      case Tag::Pair: return "P(" + first().encoding() + "," + second().encoding() + ")";
    }
    return "?";
  }

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value&, const Value&) = default;

 private:
  static Value wrap(Tag tag, Value inner) {
    Value v;
    v.tag_ = tag;
    v.children_.push_back(std::move(inner));
    return v;
  }

  Tag tag_ = Tag::Unit;
  std::size_t index_ = 0;
  std::vector<Value> children_;
};

}  // namespace noeth
