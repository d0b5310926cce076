#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "noeth/carrier.hpp"
#include "noeth/error.hpp"
#include "noeth/evidence.hpp"
#include "noeth/value.hpp"

namespace noeth {

// Node kinds shared by the witness families. A witness is a lazily unfolded
// strategy tree: Ask nodes hold total functions from values to subtrees.
template <class W>
struct AskNode {
  std::function<W(const Value&)> next;
};

template <class W>
struct TellNode {
  Value value;
  std::shared_ptr<const W> next;
};

struct AbsurdNode {};

struct DupStop {
  DupEvidence evidence;
};

using Completeness = std::function<MemEvidence(const Value&)>;

struct CompleteStop {
  Completeness locate;
};

template <class... Nodes>
class Tree {
 public:
  using Node = std::variant<Nodes...>;

  const Node& node() const noexcept { return *node_; }

  template <class N>
  bool holds() const noexcept {
    return std::holds_alternative<N>(*node_);
  }

 protected:
  explicit Tree(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

 private:
  std::shared_ptr<const Node> node_;
};

// Duplicate-seeking witness: stop once the accumulator holds a duplicate,
// or ask for any element.
class AccWitness : public Tree<DupStop, AskNode<AccWitness>> {
 public:
  using Ask = AskNode<AccWitness>;
  using Stop = DupStop;

  static AccWitness stop(DupEvidence e) { return AccWitness(Node{Stop{e}}); }
  static AccWitness ask(std::function<AccWitness(const Value&)> next) { return AccWitness(Node{Ask{std::move(next)}}); }

 private:
  using Tree::Tree;
};

// Strict witness: only fresh elements may be fed. Absurd is the vacuous base
// case and is unreachable under legal play.
class StrictWitness : public Tree<AbsurdNode, AskNode<StrictWitness>> {
 public:
  using Ask = AskNode<StrictWitness>;
  using Absurd = AbsurdNode;

  static StrictWitness absurd() { return StrictWitness(Node{Absurd{}}); }
  static StrictWitness ask(std::function<StrictWitness(const Value&)> next) {
    return StrictWitness(Node{Ask{std::move(next)}});
  }

 private:
  using Tree::Tree;
};

// Same tree shape as StrictWitness, evaluated by removing each answered
// element from the carrier instead of checking it against an accumulator.
class SetWitness {
 public:
  explicit SetWitness(StrictWitness tree) : tree_(std::move(tree)) {}
  const StrictWitness& tree() const noexcept { return tree_; }

 private:
  StrictWitness tree_;
};

class GameWitness : public Tree<AbsurdNode, TellNode<GameWitness>, AskNode<GameWitness>> {
 public:
  using Ask = AskNode<GameWitness>;
  using Tell = TellNode<GameWitness>;
  using Absurd = AbsurdNode;

  static GameWitness absurd() { return GameWitness(Node{Absurd{}}); }
  static GameWitness tell(Value v, GameWitness next) {
    return GameWitness(Node{Tell{std::move(v), std::make_shared<const GameWitness>(std::move(next))}});
  }
  static GameWitness ask(std::function<GameWitness(const Value&)> next) {
    return GameWitness(Node{Ask{std::move(next)}});
  }

 private:
  using Tree::Tree;
};

// Stop carries a completeness function: every element is located in the
// accumulator.
class ExposeWitness : public Tree<CompleteStop, TellNode<ExposeWitness>, AskNode<ExposeWitness>> {
 public:
  using Ask = AskNode<ExposeWitness>;
  using Tell = TellNode<ExposeWitness>;
  using Stop = CompleteStop;

  static ExposeWitness stop(Completeness locate) { return ExposeWitness(Node{Stop{std::move(locate)}}); }
  static ExposeWitness tell(Value v, ExposeWitness next) {
    return ExposeWitness(Node{Tell{std::move(v), std::make_shared<const ExposeWitness>(std::move(next))}});
  }
  static ExposeWitness ask(std::function<ExposeWitness(const Value&)> next) {
    return ExposeWitness(Node{Ask{std::move(next)}});
  }

 private:
  using Tree::Tree;
};

struct ListableWitness {
  std::vector<Value> items;
  Completeness locate;
};

struct BoundedWitness {
  std::size_t bound = 0;
  // Defined on every accumulator of length >= bound.
  std::function<DupEvidence(std::span<const Value>)> dup_finder;
};

// ---------------------------------------------------------------------------
// Builders

// The two-element carrier, by case analysis on up to three answers.
inline AccWitness build_bool_noeth_acc() {
  auto leaf = [](std::size_t a, std::size_t b) { return AccWitness::stop({a, b}); };
  auto is_true = [](const Value& v) { return v.as_index() != 0; };
  return AccWitness::ask([=](const Value& first) {
    if (is_true(first)) {
      return AccWitness::ask([=](const Value& second) {
        if (is_true(second)) return leaf(0, 1);
        return AccWitness::ask([=](const Value& third) { return is_true(third) ? leaf(0, 2) : leaf(1, 2); });
      });
    }
    return AccWitness::ask([=](const Value& second) {
      if (!is_true(second)) return leaf(0, 1);
      return AccWitness::ask([=](const Value& third) { return is_true(third) ? leaf(1, 2) : leaf(0, 2); });
    });
  });
}

namespace detail {

// Positions are resolved through a canonical-form index, so locating never
// goes through the carrier's equality decider.
inline Completeness index_locator(const std::vector<Value>& items) {
  auto index = std::make_shared<std::map<Value, std::size_t>>();
  for (std::size_t i = 0; i < items.size(); ++i) index->emplace(items[i], i);
  return [index](const Value& v) {
    const auto it = index->find(v);
    if (it == index->end()) throw Error(Errc::NotAMember, "value " + v.encoding() + " is not listed");
    return MemEvidence{it->second};
  };
}

inline AccWitness bounded_chain(std::shared_ptr<const BoundedWitness> b, Accumulator acc) {
  if (acc.size() >= b->bound) {
    try {
      return AccWitness::stop(b->dup_finder(acc));
    } catch (const Error& e) {
      throw Error(Errc::DishonestWitness, std::string("bounded witness failed: ") + e.what());
    }
  }
  return AccWitness::ask([b, acc](const Value& v) {
    Accumulator next = acc;
    next.push_back(v);
    return bounded_chain(b, std::move(next));
  });
}

inline StrictWitness strict_chain(std::size_t asks) {
  if (asks == 0) return StrictWitness::absurd();
  return StrictWitness::ask([asks](const Value&) { return strict_chain(asks - 1); });
}

inline AccWitness eager_from(const Carrier& c, Accumulator acc) {
  if (auto d = scan_for_dup(c, acc)) return AccWitness::stop(*d);
  return AccWitness::ask([c, acc](const Value& v) {
    Accumulator next = acc;
    next.push_back(v);
    return eager_from(c, std::move(next));
  });
}

}  // namespace detail

inline ListableWitness listable_from_enum(const Carrier& c) {
  auto items = enumerate(c);
  auto locate = detail::index_locator(items);
  return {std::move(items), std::move(locate)};
}

// Bound is length + 1: any longer list must repeat a listed position.
inline BoundedWitness listable_to_bounded(const ListableWitness& l) {
  const std::size_t buckets = l.items.size();
  auto locate = l.locate;
  return {buckets + 1, [locate, buckets](std::span<const Value> acc) {
            return pigeonhole_dup(acc, [&](const Value& v) { return locate(v).index; }, buckets);
          }};
}

// Ask exactly b.bound times, then stop with the finder's evidence for the
// accumulator actually fed.
inline AccWitness bounded_to_noeth_acc(const BoundedWitness& b) {
  return detail::bounded_chain(std::make_shared<const BoundedWitness>(b), {});
}

// n + 1 fresh asks cannot all be answered on a carrier of at most n
// elements. Never consults equality.
inline StrictWitness strict_from_bound(std::size_t n) { return detail::strict_chain(n + 1); }

// Stops at the first duplicate. Needs the equality decider at play time.
inline AccWitness eager_noeth_acc(const Carrier& c) {
  if (!c.caps().has_eq) throw Error(Errc::CapabilityMissing, "eager witness needs an equality decider");
  return detail::eager_from(c, {});
}

// One answer makes the accumulator complete when all elements are equal.
inline ExposeWitness expose_from_prop(const Carrier& c) {
  if (!c.caps().is_prop) throw Error(Errc::CapabilityMissing, "carrier '" + c.spec() + "' is not propositional");
  return ExposeWitness::ask([](const Value&) { return ExposeWitness::stop([](const Value&) { return MemEvidence{0}; }); });
}

inline Carrier maybe_prop_carrier(const Carrier& inner) { return carrier_from_spec("sum:unit," + inner.spec()); }

// Unit plus a proposition has at most two elements: among any three values
// two share a tag, and two right-tagged values are equal by propositionality.
inline BoundedWitness maybe_prop_bounded(const Carrier& inner) {
  if (!inner.caps().is_prop) throw Error(Errc::CapabilityMissing, "carrier '" + inner.spec() + "' is not propositional");
  return {3, [](std::span<const Value> acc) {
            for (const auto& v : acc)
              if (v.tag() != Value::Tag::Left && v.tag() != Value::Tag::Right)
                throw Error(Errc::TagScanFailed, "value " + v.encoding() + " carries no sum tag");
            for (std::size_t i = 0; i < acc.size(); ++i)
              for (std::size_t j = i + 1; j < acc.size(); ++j)
                if (acc[i].tag() == acc[j].tag()) return DupEvidence{i, j};
            throw Error(Errc::TagScanFailed, "no repeated tag among " + std::to_string(acc.size()) + " values");
          }};
}

// Tell every listed item, then stop with the listing's locator.
inline ExposeWitness listable_to_expose(const ListableWitness& l) {
  ExposeWitness w = ExposeWitness::stop(l.locate);
  for (auto it = l.items.rbegin(); it != l.items.rend(); ++it) w = ExposeWitness::tell(*it, std::move(w));
  return w;
}

}  // namespace noeth
