#include "goedel/machine_lib.hpp"

namespace goedel::mlib {

const TermPtr& add_term() {
  static TermPtr t = Term::rec(
      Term::id(),
      Term::comp(Term::succ(), Term::comp(Term::proj1(), Term::proj2())));
  return t;
}

const TermPtr& monus_term() {
  static TermPtr t = Term::rec(
      Term::id(),
      Term::comp(Term::pred(), Term::comp(Term::proj1(), Term::proj2())));
  return t;
}

const TermPtr& mul_term() {
  static TermPtr t = Term::rec(
      Term::zero(),
      Term::comp(add_term(),
                 Term::pair(Term::comp(Term::proj2(), Term::proj2()),
                            Term::comp(Term::proj1(), Term::proj2()))));
  return t;
}

const TermPtr& eq0diff_term() {
  // |a - b| = (a - b) + (b - a); monus(pair(n, a)) computes a - n, so the
  // first summand swaps the components first.
  static TermPtr t = Term::comp(
      add_term(),
      Term::pair(Term::comp(monus_term(),
                            Term::pair(Term::proj2(), Term::proj1())),
                 monus_term()));
  return t;
}

TermPtr succ_k(std::uint64_t k) {
  if (k == 0) return Term::id();
  TermPtr t = Term::succ();
  for (std::uint64_t i = 1; i < k; ++i) t = Term::comp(Term::succ(), t);
  return t;
}

TermPtr mul6_add(std::uint64_t c) {
  TermPtr mul6 =
      Term::comp(mul_term(), Term::pair(Term::constant(Nat(6)), Term::id()));
  return Term::comp(succ_k(c), mul6);
}

const TermPtr& g_builder_term() {
  // Codes written 6q + 7 + r: Const adds 7, Pair adds 9, Comp adds 10.
  // The Cantor pairings themselves ride on the Pair constructor.
  static TermPtr t = [] {
    TermPtr a7 = mul6_add(7), a9 = mul6_add(9), a10 = mul6_add(10);
    TermPtr q1 = Term::pair(a7, a7);                       // pair(c1, c1)
    TermPtr c2 = Term::comp(a9, q1);                       // code of pair(const u, const u)
    TermPtr q2 = Term::pair(Term::constant(Nat(6)), c2);   // pair(univ, c2)
    TermPtr c3 = Term::comp(a10, q2);                      // code of comp(univ, ...)
    TermPtr q3 = Term::pair(c3, Term::constant(Nat(3)));   // pair(c3, id)
    TermPtr c4 = Term::comp(a9, q3);                       // code of pair(..., id)
    TermPtr q4 = Term::pair(Term::constant(Nat(6)), c4);   // pair(univ, c4)
    return Term::comp(a10, q4);                            // code of comp(univ, ...)
  }();
  return t;
}

}  // namespace goedel::mlib
