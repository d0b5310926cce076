// Reads an equality decider off a witness and prints its table.
#include <iostream>

#include "noeth/noeth.hpp"

int main() {
  const auto c = noeth::carrier_from_spec("prod:bool,fin:3");
  const auto w = noeth::bounded_to_noeth_acc(noeth::listable_to_bounded(noeth::listable_from_enum(c)));
  const auto decide = noeth::extract_decider(w);
  const auto values = noeth::enumerate(c);
  for (const auto& x : values) {
    for (const auto& y : values) std::cout << (decide(x, y) == noeth::Equality::Equal ? '=' : '.');
    std::cout << "  " << noeth::format_value(c, x) << '\n';
  }
}
