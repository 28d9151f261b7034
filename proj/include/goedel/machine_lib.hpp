#pragma once

#include "goedel/term.hpp"

namespace goedel::mlib {

// Total arithmetic terms used by the construction builders. All of them
// take Cantor-paired input. The shapes are fixed: the evaluator recognizes
// the Rec-based ones and runs them in closed form with exact fuel accounting.

// add(pair(n, a)) = n + a
const TermPtr& add_term();
// monus(pair(n, a)) = a - n, floored at 0
const TermPtr& monus_term();
// mul(pair(n, a)) = n * a
const TermPtr& mul_term();
// eq0diff(pair(a, b)) = |a - b|
const TermPtr& eq0diff_term();
// k-fold successor; succ_k(0) = id
TermPtr succ_k(std::uint64_t k);
// x -> 6x + c (c >= 1), the codec's composite-code step
TermPtr mul6_add(std::uint64_t c);
// g_builder(u) = code of  comp(univ, pair(comp(univ, pair(const(u), const(u))), id))
// computed entirely inside the machine via the codec arithmetic.
const TermPtr& g_builder_term();

}  // namespace goedel::mlib
