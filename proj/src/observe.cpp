#include "goedel/observe.hpp"

namespace goedel {

DiagResult godel_sentence(const SystemPtr& base, std::uint64_t atom_tag) {
  (void)base;  // the tag's backing is the base by construction
  constexpr std::uint64_t va = 0, vb = 1;
  FormulaPtr open_formula = Formula::all(
      vb, Formula::lnot(Formula::atom(atom_tag, FOTerm::var(va),
                                      FOTerm::var(vb))));
  Nat p_prime = gn_formula(open_formula);
  FormulaPtr sentence =
      substitute(open_formula, va, FOTerm::numeral(p_prime));
  return {std::move(p_prime), std::move(sentence), std::move(open_formula),
          atom_tag};
}

SystemPtr observe(const SystemPtr& base) {
  std::uint64_t fresh_tag = base->level() + 1;
  DiagResult diag = godel_sentence(base, fresh_tag);
  FormulaPtr schema =
      Formula::imp(Formula::consys(fresh_tag), diag.sentence);
  return SystemDef::extend(base, std::move(schema));
}

Proof translate_proof(const SystemPtr& base, const Proof& proof) {
  CheckResult r = check_proof(base, proof);
  if (!r.accepted)
    throw std::invalid_argument(
        "translate_proof: proof is not accepted by the base system (line " +
        std::to_string(r.line) + ": " + r.reason + ")");
  return proof;  // signature extension preserves every justification
}

std::vector<TowerLevel> tower(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("tower: k >= 1");
  std::vector<TowerLevel> out;
  SystemPtr cur = SystemDef::base();
  for (std::uint64_t lvl = 1; lvl <= k; ++lvl) {
    DiagResult diag = godel_sentence(cur, lvl);
    SystemPtr next = observe(cur);
    Proof conditional;
    ProofLine ln;
    ln.formula = next->admitted_schemas().back();
    ln.kind = ProofLine::Just::Admit;
    ln.admit_id = next->admitted_schemas().size();
    conditional.lines.push_back(std::move(ln));
    CheckResult r = check_proof(next, conditional);
    if (!r.accepted)
      throw std::logic_error("tower: conditional proof rejected: " + r.reason);
    out.push_back({next, std::move(diag), std::move(conditional)});
    cur = next;
  }
  return out;
}

}  // namespace goedel
