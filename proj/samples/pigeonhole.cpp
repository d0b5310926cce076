// A carrier whose equality is withheld still admits the strict witness,
// but not the duplicate-seeking one.
#include <iostream>

#include "noeth/noeth.hpp"

int main() {
  const auto c = noeth::carrier_from_spec("opaque:3");
  const auto s = noeth::explore_strict(noeth::strict_from_bound(3), c);
  std::cout << "strict: " << s.prover_wins << "/" << s.plays << " won, eq calls " << c.eq_call_count() << '\n';
  try {
    noeth::build_named("from-listable", c);
  } catch (const noeth::Error& e) {
    std::cout << "from-listable: " << e.what() << '\n';
  }
}
