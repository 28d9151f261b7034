#pragma once

#include <random>

#include "goedel/term.hpp"

namespace goedel::testing {

// Random closed term with height <= max_depth. Used across suites; keep the
// distribution leaf-heavy so generated programs stay cheap to run.
inline TermPtr random_term(std::mt19937_64& rng, unsigned max_depth) {
  auto leaf = [&]() -> TermPtr {
    switch (rng() % 8) {
      case 0: return Term::zero();
      case 1: return Term::succ();
      case 2: return Term::pred();
      case 3: return Term::id();
      case 4: return Term::proj1();
      case 5: return Term::proj2();
      case 6: return Term::univ();
      default: return Term::constant(Nat(rng() % 50));
    }
  };
  if (max_depth <= 1) return leaf();
  switch (rng() % 12) {
    case 0:
    case 1:
    case 2:
    case 3:
      return leaf();
    case 4:
      return Term::mu(random_term(rng, max_depth - 1));
    case 5:
    case 6:
      return Term::pair(random_term(rng, max_depth - 1),
                        random_term(rng, max_depth - 1));
    case 7:
    case 8:
      return Term::comp(random_term(rng, max_depth - 1),
                        random_term(rng, max_depth - 1));
    case 9:
      return Term::rec(random_term(rng, max_depth - 1),
                       random_term(rng, max_depth - 1));
    default:
      return Term::ifz(random_term(rng, max_depth - 1),
                       random_term(rng, max_depth - 1),
                       random_term(rng, max_depth - 1));
  }
}

}  // namespace goedel::testing
