#pragma once

#include "goedel/eval.hpp"

namespace goedel {

// Named entries of the small library of total arithmetic terms.
enum class StdlibName { Add, Mul, Monus, Eq0Diff, SuccK, GBuilder };

// SuccK takes the fold count in k; the others ignore it.
TermPtr stdlib_term(StdlibName name, std::uint64_t k = 0);

// Specialization: phi_{smn(i,a)}(x) = phi_i(pair(a, x)).
CodeIndex smn(const CodeIndex& i, const Nat& a);

// Productive witness for Tot: the code of x -> phi_{phi_i(x)}(x) + 1.
CodeIndex psi_tot(const CodeIndex& i);

// Productive witness for the complement of the self-halting set: a Mu
// program whose domain is the range of n >= 1 -> phi_i(n).
CodeIndex range_to_domain(const CodeIndex& i);

// phi_result(1) = v and phi_result(n) = phi_i(n - 1) for n >= 2.
CodeIndex extend_enumerator(const CodeIndex& i, const Nat& v);

// Host-side value of the in-machine g_builder:
// g(u) = code of comp(univ, pair(comp(univ, pair(const(u), const(u))), id)).
Nat g_meta(const Nat& u);

// Kleene recursion theorem: phi_result = phi_{phi_h(result)} pointwise.
// h must be supplied as an in-machine index computing a total code map.
CodeIndex fixed_point(const CodeIndex& h);

// The Const-builder u -> 6u + 7 (the code of const(u)), as an index.
CodeIndex const_builder();

// fixed_point(const_builder()): a program that outputs its own index.
CodeIndex quine();

}  // namespace goedel
