#include "goedel/constructions.hpp"

#include "goedel/machine_lib.hpp"

namespace goedel {

TermPtr stdlib_term(StdlibName name, std::uint64_t k) {
  switch (name) {
    case StdlibName::Add: return mlib::add_term();
    case StdlibName::Mul: return mlib::mul_term();
    case StdlibName::Monus: return mlib::monus_term();
    case StdlibName::Eq0Diff: return mlib::eq0diff_term();
    case StdlibName::SuccK: return mlib::succ_k(k);
    case StdlibName::GBuilder: return mlib::g_builder_term();
  }
  throw std::invalid_argument("unknown stdlib name");
}

CodeIndex smn(const CodeIndex& i, const Nat& a) {
  return encode(Term::comp(
      decode(i), Term::pair(Term::constant(a), Term::id())));
}

CodeIndex psi_tot(const CodeIndex& i) {
  TermPtr inner = Term::comp(
      Term::univ(), Term::pair(Term::constant(i.value), Term::id()));
  TermPtr diag =
      Term::comp(Term::univ(), Term::pair(inner, Term::id()));
  return encode(Term::comp(Term::succ(), diag));
}

CodeIndex range_to_domain(const CodeIndex& i) {
  // Mu body sees pair(n, x): |phi_i(n + 1) - x|
  TermPtr body = Term::comp(
      mlib::eq0diff_term(),
      Term::pair(Term::comp(decode(i),
                            Term::comp(Term::succ(), Term::proj1())),
                 Term::proj2()));
  return encode(Term::mu(body));
}

CodeIndex extend_enumerator(const CodeIndex& i, const Nat& v) {
  return encode(Term::ifz(Term::pred(), Term::constant(v),
                          Term::comp(decode(i), Term::pred())));
}

Nat g_meta(const Nat& u) {
  TermPtr cu = Term::constant(u);
  TermPtr inner = Term::comp(Term::univ(), Term::pair(cu, cu));
  return encode(Term::comp(Term::univ(), Term::pair(inner, Term::id())))
      .value;
}

CodeIndex fixed_point(const CodeIndex& h) {
  Nat v =
      encode(Term::comp(decode(h), mlib::g_builder_term())).value;
  return CodeIndex(g_meta(v));
}

CodeIndex const_builder() { return encode(mlib::mul6_add(7)); }

CodeIndex quine() { return fixed_point(const_builder()); }

}  // namespace goedel
