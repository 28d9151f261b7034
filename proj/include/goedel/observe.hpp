#pragma once

#include "goedel/system.hpp"

namespace goedel {

// Diagonal construction for one observing step: the open formula
// D = all vb. ~A<tag>(va, vb) with free variable va, its number p', and the
// closed sentence G = D[numeral(p') / va].
struct DiagResult {
  Nat p_prime;
  FormulaPtr sentence;
  FormulaPtr open_formula;
  std::uint64_t atom_tag;
};

DiagResult godel_sentence(const SystemPtr& base, std::uint64_t atom_tag);

// S -> S-bar: one more level with a fresh checker-backed atom for S, a fresh
// Consys atom, and the single admitted schema Consys -> G.
SystemPtr observe(const SystemPtr& base);

// A proof accepted by the base re-reads unchanged in observe(base); the
// precondition (acceptance in the base) is enforced.
Proof translate_proof(const SystemPtr& base, const Proof& proof);

struct TowerLevel {
  SystemPtr system;      // S_k
  DiagResult diag;       // the predecessor's Godel sentence
  Proof conditional;     // the accepted one-line ADMIT proof of Consys -> G
};

// S_1 .. S_k from S_0, each level proving the conditional sentence of the
// one below it.
std::vector<TowerLevel> tower(std::uint64_t k);

}  // namespace goedel
