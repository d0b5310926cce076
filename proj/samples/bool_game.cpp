// Plays the two-element witness against every opponent answer sequence.
#include <iostream>

#include "noeth/noeth.hpp"

int main() {
  const auto c = noeth::carrier_from_spec("bool");
  const auto w = noeth::build_bool_noeth_acc();
  noeth::ExploreOptions opts;
  opts.visit = [&](const noeth::Transcript& t) { std::cout << noeth::to_json(t, c).dump() << '\n'; };
  const auto s = noeth::explore_noeth_acc(w, c, noeth::kDefaultFuel, opts);
  std::cout << s.prover_wins << "/" << s.plays << " plays won, longest play " << s.max_asks << " asks\n";
}
