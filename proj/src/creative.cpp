#include "goedel/creative.hpp"

namespace goedel {

std::string to_string(PsiKind k) { return k == PsiKind::Tot ? "tot" : "kbar"; }

PsiKind psi_kind_from_string(const std::string& s) {
  if (s == "tot") return PsiKind::Tot;
  if (s == "kbar") return PsiKind::KBar;
  throw std::invalid_argument("unknown psi kind: " + s);
}

std::string to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::Escaped: return "ESCAPED";
    case AuditVerdict::Inconclusive: return "INCONCLUSIVE";
    default: return "REFUTED-PRECONDITION";
  }
}

CreativeState make_creative_state(CodeIndex seed, PsiKind kind, Nat fuel,
                                  std::uint64_t sample_width) {
  CreativeState s;
  s.current = std::move(seed);
  s.psi_kind = kind;
  s.fuel = std::move(fuel);
  s.sample_width = sample_width;
  return s;
}

std::pair<TermPtr, CodeIndex> perceive(std::string_view text) {
  TermPtr t = parse_term(text);
  CodeIndex i = encode(t);
  return {std::move(t), std::move(i)};
}

std::optional<CodeIndex> find_index_by_enumeration(const TermPtr& t,
                                                   std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("find_index: bound >= 1");
  for (std::uint64_t c = 0; c < bound; ++c) {
    if (decode(Nat(c)) == t) return CodeIndex(Nat(c));
  }
  return std::nullopt;
}

namespace {

struct EvidenceOutcome {
  bool ok;
  std::string reason;
  Nat psi_value;
  std::vector<EvidenceTriple> evidence;
  // For audits: distinguishes "ran dry" from "sampled value misbehaves".
  bool refuted = false;
};

EvidenceOutcome collect_evidence(const CodeIndex& i, PsiKind kind,
                                 std::uint64_t sample_width, const Nat& fuel) {
  EvidenceOutcome out;
  out.ok = false;
  Fuel budget{fuel};
  if (kind == PsiKind::Tot) {
    CodeIndex psi = psi_tot(i);
    out.psi_value = psi.value;
    for (std::uint64_t n = 1; n <= sample_width; ++n) {
      EvalOutcome k = eval_index(i, Nat(n), budget);
      if (!k.halted()) {
        out.reason = "enumerator ran out of fuel at position " +
                     std::to_string(n);
        return out;
      }
      EvalOutcome m = eval_index(CodeIndex(k.value()), Nat(n), budget);
      if (!m.halted()) {
        out.reason = "enumerated index fails to halt on " + std::to_string(n) +
                     " within fuel";
        out.refuted = true;
        return out;
      }
      EvalOutcome lhs = eval_index(psi, Nat(n), budget);
      if (!lhs.halted()) {
        out.reason = "psi evaluation ran out of fuel at position " +
                     std::to_string(n);
        return out;
      }
      if (lhs.value() != m.value().succ())
        throw std::logic_error("diagonal identity violated");
      out.evidence.push_back({n, lhs.value(), m.value()});
    }
  } else {
    CodeIndex psi = range_to_domain(i);
    out.psi_value = psi.value;
    for (std::uint64_t n = 1; n <= sample_width; ++n) {
      EvalOutcome e = eval_index(i, Nat(n), budget);
      if (!e.halted()) {
        out.reason = "enumerator ran out of fuel at position " +
                     std::to_string(n);
        return out;
      }
      if (e.value() == out.psi_value) {
        out.reason = "psi value collides with enumerated value at position " +
                     std::to_string(n);
        out.refuted = true;
        return out;
      }
      out.evidence.push_back({n, e.value(), out.psi_value});
    }
  }
  out.ok = true;
  return out;
}

}  // namespace

StepResult creative_step(const CreativeState& state) {
  EvidenceOutcome ev = collect_evidence(state.current, state.psi_kind,
                                        state.sample_width, state.fuel);
  if (!ev.ok) return {false, ev.reason, state};
  CreativeState next = state;
  StepRecord rec;
  rec.step = state.history.size() + 1;
  rec.input_index = state.current;
  rec.psi_value = ev.psi_value;
  rec.extended_index = extend_enumerator(state.current, ev.psi_value);
  rec.evidence = std::move(ev.evidence);
  next.current = rec.extended_index;
  next.history.push_back(std::move(rec));
  return {true, "", std::move(next)};
}

Transcript creative_run(CodeIndex seed, std::uint64_t k, PsiKind kind,
                        Nat fuel, std::uint64_t sample_width) {
  CreativeState state =
      make_creative_state(seed, kind, fuel, sample_width);
  Transcript t;
  t.seed = std::move(seed);
  t.psi_kind = kind;
  t.fuel = std::move(fuel);
  t.sample_width = sample_width;
  for (std::uint64_t s = 0; s < k; ++s) {
    StepResult r = creative_step(state);
    if (!r.ok) {
      t.complete = false;
      break;
    }
    state = std::move(r.state);
  }
  t.steps = state.history;
  return t;
}

AuditReport escape_audit(const CodeIndex& candidate, PsiKind kind,
                         std::uint64_t sample_width, const Nat& fuel) {
  EvidenceOutcome ev = collect_evidence(candidate, kind, sample_width, fuel);
  AuditReport rep;
  rep.psi_value = ev.psi_value;
  rep.evidence = std::move(ev.evidence);
  rep.detail = ev.reason;
  if (ev.ok) {
    rep.verdict = AuditVerdict::Escaped;
  } else if (ev.refuted) {
    rep.verdict = AuditVerdict::RefutedPrecondition;
  } else {
    rep.verdict = AuditVerdict::Inconclusive;
  }
  return rep;
}

EvalOutcome apply_general(const CodeIndex& psi_index, const CodeIndex& i,
                          const Nat& fuel) {
  return eval_index(psi_index, i.value, Fuel(fuel));
}

}  // namespace goedel
