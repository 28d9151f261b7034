#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "goedel/creative.hpp"
#include "goedel/transcript.hpp"
#include "term_gen.hpp"

using namespace goedel;

namespace {
const Nat kFuel(1000000);
CodeIndex seed_const(std::uint64_t payload) {
  return encode(Term::constant(Nat(payload)));
}
}

TEST_SUITE("creative") {

TEST_CASE("perceive parses and encodes in one step") {
  auto [t1, i1] = perceive("const(3)");
  CHECK(t1 == Term::constant(Nat(3)));
  CHECK(i1.value == Nat(25));
  auto [t2, i2] = perceive("zero");
  CHECK(i2.value == Nat(0));
  auto [t3, i3] = perceive("comp(succ,succ)");
  CHECK(i3.value == Nat(34));
  CHECK_THROWS_AS(perceive("nonsense"), ParseError);
}

TEST_CASE("find_index_by_enumeration spec examples") {
  auto succ_ix = find_index_by_enumeration(Term::succ(), 10);
  REQUIRE(succ_ix.has_value());
  CHECK(succ_ix->value == Nat(1));
  auto c0 = find_index_by_enumeration(Term::constant(Nat(0)), 100);
  REQUIRE(c0.has_value());
  CHECK(c0->value == Nat(7));
  CHECK_FALSE(
      find_index_by_enumeration(Term::constant(Nat(1000)), 100).has_value());
}

TEST_CASE("find_index agrees with encode below the bound") {
  std::mt19937_64 rng(31337);
  int found = 0;
  while (found < 25) {
    TermPtr t = goedel::testing::random_term(rng, 4);
    Nat code = encode(t).value;
    if (!code.fits_u64() || code.as_u64() >= 50000) continue;
    ++found;
    auto ix = find_index_by_enumeration(t, 50000);
    REQUIRE(ix.has_value());
    CHECK(ix->value == code);
  }
}

TEST_CASE("creative_step spec example: seed const(encode(id))") {
  CreativeState s =
      make_creative_state(seed_const(3), PsiKind::Tot, kFuel, 5);
  StepResult r = creative_step(s);
  REQUIRE(r.ok);
  REQUIRE(r.state.history.size() == 1);
  const StepRecord& rec = r.state.history[0];
  CHECK(rec.psi_value == psi_tot(seed_const(3)).value);
  CHECK(rec.extended_index ==
        extend_enumerator(seed_const(3), rec.psi_value));
  CHECK(r.state.current == rec.extended_index);
  REQUIRE(rec.evidence.size() == 5);
  for (std::uint64_t n = 1; n <= 5; ++n) {
    CHECK(rec.evidence[n - 1].position == n);
    CHECK(rec.evidence[n - 1].lhs == Nat(n + 1));
    CHECK(rec.evidence[n - 1].rhs == Nat(n));
  }
}

TEST_CASE("two steps produce distinct psi values") {
  CreativeState s =
      make_creative_state(seed_const(3), PsiKind::Tot, kFuel, 5);
  StepResult r1 = creative_step(s);
  REQUIRE(r1.ok);
  StepResult r2 = creative_step(r1.state);
  REQUIRE(r2.ok);
  CHECK(r1.state.history[0].psi_value != r2.state.history[1].psi_value);
}

TEST_CASE("kbar step on a singleton enumerator") {
  CreativeState s =
      make_creative_state(seed_const(3), PsiKind::KBar, kFuel, 5);
  StepResult r = creative_step(s);
  REQUIRE(r.ok);
  const StepRecord& rec = r.state.history[0];
  CHECK(rec.psi_value == range_to_domain(seed_const(3)).value);
  for (const EvidenceTriple& e : rec.evidence) {
    CHECK(e.lhs == Nat(3));           // enumerated value
    CHECK(e.lhs != e.rhs);            // psi value differs
  }
}

TEST_CASE("evidence failure leaves the state unchanged") {
  // seed enumerates a non-total index: the inner evaluation exhausts fuel
  CodeIndex bad = seed_const(
      encode(Term::mu(Term::constant(Nat(1)))).value.as_u64());
  CreativeState s = make_creative_state(bad, PsiKind::Tot, Nat(5000), 3);
  StepResult r = creative_step(s);
  CHECK_FALSE(r.ok);
  CHECK(r.state.history.empty());
  CHECK(r.state.current == bad);
  CHECK(r.reason.find("fails to halt") != std::string::npos);
}

TEST_CASE("creative_run produces pairwise distinct psi values") {
  Transcript t = creative_run(seed_const(3), 3, PsiKind::Tot, kFuel, 5);
  CHECK(t.complete);
  REQUIRE(t.steps.size() == 3);
  for (size_t i = 0; i < t.steps.size(); ++i)
    for (size_t j = i + 1; j < t.steps.size(); ++j)
      CHECK(t.steps[i].psi_value != t.steps[j].psi_value);
}

TEST_CASE("creative_run with k=0 returns the bare seed") {
  Transcript t = creative_run(seed_const(3), 0, PsiKind::Tot, kFuel, 5);
  CHECK(t.complete);
  CHECK(t.steps.empty());
  CHECK(t.seed == seed_const(3));
}

TEST_CASE("aborted run is flagged incomplete") {
  CodeIndex bad = seed_const(
      encode(Term::mu(Term::constant(Nat(1)))).value.as_u64());
  Transcript t = creative_run(bad, 2, PsiKind::Tot, Nat(5000), 3);
  CHECK_FALSE(t.complete);
  CHECK(t.steps.empty());
}

TEST_CASE("extension stacking: enumerator replays psi values in reverse") {
  Transcript t = creative_run(seed_const(3), 4, PsiKind::Tot, kFuel, 3);
  REQUIRE(t.steps.size() == 4);
  CodeIndex current = t.steps.back().extended_index;
  auto outs = run_enumerator(current, 4 + 4, Fuel(kFuel));
  for (std::uint64_t n = 1; n <= 4; ++n) {
    REQUIRE(outs[n - 1].halted());
    CHECK(outs[n - 1].value() == t.steps[4 - n].psi_value);
  }
  for (std::uint64_t c = 0; c < 4; ++c) {
    REQUIRE(outs[4 + c].halted());
    CHECK(outs[4 + c].value() == Nat(3));  // the seed's constant output
  }
}

TEST_CASE("escape_audit verdicts") {
  // the seed escapes
  AuditReport ok = escape_audit(seed_const(3), PsiKind::Tot, 5, kFuel);
  CHECK(ok.verdict == AuditVerdict::Escaped);
  CHECK(ok.evidence.size() == 5);
  for (const EvidenceTriple& e : ok.evidence)
    CHECK(e.lhs == e.rhs.succ());
  // a seed enumerating a diverging index is refuted at n = 1
  CodeIndex bad = seed_const(
      encode(Term::mu(Term::constant(Nat(1)))).value.as_u64());
  AuditReport r = escape_audit(bad, PsiKind::Tot, 5, Nat(5000));
  CHECK(r.verdict == AuditVerdict::RefutedPrecondition);
  // too little fuel for the enumerator itself is inconclusive
  CodeIndex slow = encode(Term::comp(Term::constant(Nat(3)),
                                     Term::mu(Term::proj1())));
  AuditReport inc = escape_audit(slow, PsiKind::Tot, 5, Nat(2));
  CHECK(inc.verdict == AuditVerdict::Inconclusive);
}

TEST_CASE("audit after a run: every extended index escapes") {
  Transcript t = creative_run(seed_const(3), 3, PsiKind::Tot, kFuel, 4);
  REQUIRE(t.steps.size() == 3);
  for (const StepRecord& rec : t.steps) {
    AuditReport rep =
        escape_audit(rec.extended_index, PsiKind::Tot, 4, kFuel);
    CHECK(rep.verdict == AuditVerdict::Escaped);
  }
}

TEST_CASE("kbar audit on a singleton seed") {
  AuditReport rep = escape_audit(seed_const(3), PsiKind::KBar, 5, kFuel);
  CHECK(rep.verdict == AuditVerdict::Escaped);
  CHECK(rep.psi_value == range_to_domain(seed_const(3)).value);
}

TEST_CASE("apply_general spec examples") {
  CHECK(apply_general(CodeIndex(Nat(1)), CodeIndex(Nat(4)), kFuel) ==
        EvalOutcome::make_halted(Nat(5)));
  CHECK(apply_general(CodeIndex(Nat(3)), CodeIndex(Nat(123)), kFuel) ==
        EvalOutcome::make_halted(Nat(123)));
  CodeIndex diverge = encode(Term::mu(Term::constant(Nat(1))));
  CHECK_FALSE(apply_general(diverge, CodeIndex(Nat(7)), Nat(500)).halted());
}

TEST_CASE("transcript persistence round trips byte-exactly") {
  Transcript t = creative_run(seed_const(3), 3, PsiKind::Tot, kFuel, 5);
  std::string bytes = transcript_to_string(t);
  Transcript back = transcript_from_string(bytes);
  CHECK(transcript_to_string(back) == bytes);
  CHECK(back.steps.size() == t.steps.size());
  CHECK(back.seed == t.seed);
  CHECK(back.fuel == t.fuel);
  for (size_t i = 0; i < t.steps.size(); ++i) {
    CHECK(back.steps[i].psi_value == t.steps[i].psi_value);
    CHECK(back.steps[i].extended_index == t.steps[i].extended_index);
    CHECK(back.steps[i].evidence.size() == t.steps[i].evidence.size());
  }
}

TEST_CASE("identical runs serialize identically") {
  Transcript a = creative_run(seed_const(3), 3, PsiKind::Tot, kFuel, 5);
  Transcript b = creative_run(seed_const(3), 3, PsiKind::Tot, kFuel, 5);
  CHECK(transcript_to_string(a) == transcript_to_string(b));
}

TEST_CASE("transcript table renders one row per step") {
  Transcript t3 = creative_run(seed_const(3), 3, PsiKind::Tot, kFuel, 5);
  std::string table = render_transcript_table(t3);
  CHECK(std::count(table.begin(), table.end(), '\n') == 2 + 3);
  Transcript t0 = creative_run(seed_const(3), 0, PsiKind::Tot, kFuel, 5);
  std::string empty_table = render_transcript_table(t0);
  CHECK(std::count(empty_table.begin(), empty_table.end(), '\n') == 2);
  // structured mode is the persistence format verbatim
  CHECK(transcript_to_string(t3) ==
        transcript_to_string(transcript_from_string(transcript_to_string(t3))));
}

TEST_CASE("five step run stays fast and fully audited") {
  Transcript t = creative_run(seed_const(3), 5, PsiKind::Tot, kFuel, 5);
  CHECK(t.complete);
  REQUIRE(t.steps.size() == 5);
  AuditReport last =
      escape_audit(t.steps.back().extended_index, PsiKind::Tot, 5, kFuel);
  CHECK(last.verdict == AuditVerdict::Escaped);
  // psi value of the audit differs from every previously emitted value
  for (const StepRecord& rec : t.steps)
    CHECK(last.psi_value != rec.psi_value);
}

}  // TEST_SUITE
