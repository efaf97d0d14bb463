// Brute-force pebbling numbers of small cycles next to the closed form.
#include <cstdio>

#include "pebble/pebble.hpp"

int main() {
  int bad = 0;
  for (std::uint32_t k = 3; k <= 7; ++k) {
    auto r = pebble::pebbling_number(pebble::build_cycle(k));
    const auto f = pebble::cycle_pebbling_formula(k);
    std::printf("C%u  brute %llu  formula %llu\n", k, static_cast<unsigned long long>(r.value), static_cast<unsigned long long>(f));
    if (r.value != f) ++bad;
  }
  return bad;
}
