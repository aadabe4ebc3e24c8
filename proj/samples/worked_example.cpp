// F_{45000} from F_5000 and powers of L_5000, checked against fast doubling,
// followed by the term table for G_{nm} with seed (2, 1).

#include <iostream>

#include "fibmulti.hpp"

int main() {
  using namespace fibmulti;

  const SeqValue via_identity = fib_multiple({5000, 9});
  const SeqValue via_doubling = fib_fast_doubling(45000);
  std::cout << "F_45000 has " << decimal_digits(via_identity) << " digits; identity "
            << (via_identity == via_doubling ? "matches" : "DOES NOT match") << " fast doubling\n\n";

  std::cout << report_render(theorem_table(Theorem::generalized, {2, 5}, {2, 1}), Format::text);
  std::cout << "gen_fib((2,1), 10) = " << gen_fib({2, 1}, 10) << '\n';
  return via_identity == via_doubling ? 0 : 1;
}
