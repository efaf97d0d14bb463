// A distribution on J_{2,3} that reaches the target only with a non-greedy move.
#include <iostream>

#include "pebble/pebble.hpp"

int main() {
  using namespace pebble;
  auto c = build_greedy_counterexample();
  std::cout << c.graph_spec << "  " << to_text(c.graph, c.distribution) << "\n";
  for (const auto& q : verify_case(c)) {
    std::cout << "root " << c.graph.label(q.query.root) << " " << to_string(q.query.policy) << ": " << to_string(q.result.outcome) << "\n";
    if (q.result.witness) std::cout << "  " << to_text(c.graph, q.result.witness->moves) << "\n";
  }
  return all_passed(verify_case(c)) ? 0 : 1;
}
