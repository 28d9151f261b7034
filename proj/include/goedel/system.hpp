#pragma once

#include <vector>

#include "goedel/formula.hpp"

namespace goedel {

// A level in the observing tower. S0 is plain Robinson-style arithmetic;
// level k adds the checker-backed provability atom A<k> (decided by
// prf_checker over the level k-1 system), the admitted-hypothesis atom
// Consys<k>, and one admitted schema per observe step. Atom tags <= level
// are in signature; everything lower is shared cumulatively.
class SystemDef;
using SystemPtr = std::shared_ptr<const SystemDef>;

class SystemDef {
 public:
  static SystemPtr base();  // S0

  std::uint64_t level() const { return level_; }
  const SystemPtr& below() const { return below_; }

  bool atom_tag_in_signature(std::uint64_t tag) const {
    return tag >= 1 && tag <= level_;
  }
  bool consys_tag_in_signature(std::uint64_t tag) const {
    return tag >= 1 && tag <= level_;
  }
  // Every formula symbol used by f is available in this system.
  bool in_signature(const FormulaPtr& f) const;

  const std::vector<FormulaPtr>& admitted_schemas() const { return admitted_; }

  static SystemPtr extend(SystemPtr below, FormulaPtr admitted_schema);

 private:
  SystemDef(std::uint64_t level, SystemPtr below,
            std::vector<FormulaPtr> admitted)
      : level_(level), below_(std::move(below)), admitted_(std::move(admitted)) {}
  std::uint64_t level_;
  SystemPtr below_;
  std::vector<FormulaPtr> admitted_;
};

// Axiom schemas of every system. L1-L3 propositional, Q1-Q2 quantifier,
// E1-E2 equality, N1-N6 arithmetic.
enum class AxiomId : std::uint8_t {
  L1 = 1, L2, L3, Q1, Q2, E1, E2, N1, N2, N3, N4, N5, N6
};
const char* axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);

// Whether f instantiates the schema (side conditions included).
bool axiom_instance(AxiomId id, const FormulaPtr& f);

struct ProofLine {
  FormulaPtr formula;
  enum class Just : std::uint8_t { Axiom, MP, Gen, Chk, Admit } kind;
  AxiomId axiom_id = AxiomId::L1;  // Axiom
  std::uint64_t ref1 = 0;          // MP premise A, Gen premise (1-based)
  std::uint64_t ref2 = 0;          // MP premise A -> B
  std::uint64_t gen_var = 0;       // Gen bound variable
  std::uint64_t admit_id = 0;      // Admit schema number (1-based)
};

struct Proof {
  std::vector<ProofLine> lines;
};

struct CheckResult {
  bool accepted;
  std::size_t line;    // 1-based index of the first failing line
  std::string reason;  // machine-readable code plus detail
};

// The system at level k along the below-chain (k <= sys->level()).
SystemPtr system_at_level(SystemPtr sys, std::uint64_t k);

CheckResult check_proof(const SystemPtr& sys, const Proof& proof);

// The executable proof predicate behind atom tag level+1: true iff a codes
// a formula with exactly one free variable and b codes a proof, accepted by
// check_proof over `base`, of that formula with its own numeral substituted.
bool prf_checker(const SystemPtr& base, const Nat& a, const Nat& b);

// Godel numbering of proof objects (total decode; malformed codes simply
// fail the check): a proof is a nil/cons list, nil = 0,
// cons(h, t) = pair(h, t) + 1, of lines pair(gn(formula), jcode) with
//   jcode = pair(0, axiom id) | pair(1, pair(i, j)) | pair(2, pair(i, var))
//         | pair(3, 0) | pair(4, admit id).
Nat encode_proof(const Proof& p);
std::optional<Proof> decode_proof(const Nat& code);

// Proof file format: one line per step,
//   "n. <formula> ; AX <id> | MP <i> <j> | GEN <i> v<k> | CHK | ADMIT <id>"
std::string print_proof(const Proof& p);
Proof parse_proof(std::string_view text);

}  // namespace goedel
