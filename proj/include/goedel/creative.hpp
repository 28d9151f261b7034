#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goedel/constructions.hpp"

namespace goedel {

// Which productive set the loop is working against.
enum class PsiKind { Tot, KBar };

std::string to_string(PsiKind k);
PsiKind psi_kind_from_string(const std::string& s);

// One sampled diagonal check. In Tot mode lhs = phi_{psi(i)}(n) and
// rhs = phi_{phi_i(n)}(n), so lhs == rhs + 1 exactly. In KBar mode lhs is
// the enumerated value phi_i(n) and rhs is the psi value, checked unequal.
struct EvidenceTriple {
  std::uint64_t position;
  Nat lhs;
  Nat rhs;
};

struct StepRecord {
  std::uint64_t step;       // 1-based
  CodeIndex input_index;    // i
  Nat psi_value;            // psi(i)
  CodeIndex extended_index; // extend_enumerator(i, psi(i))
  std::vector<EvidenceTriple> evidence;
};

struct Transcript {
  CodeIndex seed;
  PsiKind psi_kind = PsiKind::Tot;
  Nat fuel;
  std::uint64_t sample_width = 5;
  std::string created;  // optional timestamps; empty by default so that
  std::string updated;  // identical runs serialize byte-identically
  bool complete = true;
  std::vector<StepRecord> steps;
};

struct CreativeState {
  CodeIndex current;
  std::vector<StepRecord> history;
  PsiKind psi_kind = PsiKind::Tot;
  Nat fuel;
  std::uint64_t sample_width = 5;
};

CreativeState make_creative_state(CodeIndex seed, PsiKind kind, Nat fuel,
                                  std::uint64_t sample_width);

// Ingestion of a concrete program representation: parse it and hand back
// the canonical index.
std::pair<TermPtr, CodeIndex> perceive(std::string_view text);

// Least c < bound with decode(c) syntactically equal to t; equals encode(t)
// whenever encode(t) < bound.
std::optional<CodeIndex> find_index_by_enumeration(const TermPtr& t,
                                                   std::uint64_t bound);

struct StepResult {
  bool ok;
  std::string reason;   // set when the step was inconclusive
  CreativeState state;  // advanced when ok, otherwise the input state
};

// One application of the rule "if exists P_i then apply psi to i":
// compute psi(current), gather diagonal evidence on 1..sample_width,
// extend the enumerator. Inconclusive evidence leaves the state unchanged.
StepResult creative_step(const CreativeState& state);

// k successful steps from the seed; aborts at the first inconclusive step
// and flags the transcript incomplete.
Transcript creative_run(CodeIndex seed, std::uint64_t k, PsiKind kind,
                        Nat fuel, std::uint64_t sample_width);

enum class AuditVerdict { Escaped, Inconclusive, RefutedPrecondition };

std::string to_string(AuditVerdict v);

struct AuditReport {
  AuditVerdict verdict;
  Nat psi_value;
  std::vector<EvidenceTriple> evidence;
  std::string detail;
};

// Bounded check of the escape claim: psi(candidate) differs from the
// candidate's sampled outputs.
AuditReport escape_audit(const CodeIndex& candidate, PsiKind kind,
                         std::uint64_t sample_width, const Nat& fuel);

// The general existence principle as an operation: apply any computable psi
// to the index of any existing program. No properties are checked.
EvalOutcome apply_general(const CodeIndex& psi_index, const CodeIndex& i,
                          const Nat& fuel);

}  // namespace goedel
