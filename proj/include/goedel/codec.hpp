#pragma once

#include "goedel/term.hpp"

namespace goedel {

// Godel number of a Term under the fixed bijective numbering. The listing
// P_0, P_1, P_2, ... is decode(0), decode(1), decode(2), ...
struct CodeIndex {
  Nat value;

  CodeIndex() = default;
  explicit CodeIndex(Nat v) : value(std::move(v)) {}

  friend bool operator==(const CodeIndex& a, const CodeIndex& b) {
    return a.value == b.value;
  }
  friend bool operator!=(const CodeIndex& a, const CodeIndex& b) {
    return !(a == b);
  }
};

// Nullary constructors take codes 0..6 in the order
// Zero, Succ, Pred, Id, Proj1, Proj2, Univ. Everything else is
// 7 + 6q + r with r the constructor selector:
//   r=0 Const(q)                    r=1 Mu, q = code(body)
//   r=2 Pair, q = pair(f, g)        r=3 Comp, q = pair(f, g)
//   r=4 IfZ,  q = pair(c, pair(a, b))   r=5 Rec, q = pair(base, step)
CodeIndex encode(const TermPtr& t);

// Total inverse of encode: every natural decodes to a Term.
TermPtr decode(const CodeIndex& i);
TermPtr decode(const Nat& i);

}  // namespace goedel
