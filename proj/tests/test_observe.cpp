#include "doctest.h"

#include "goedel/observe.hpp"
#include "proof_corpus.hpp"

using namespace goedel;

TEST_SUITE("observe") {

TEST_CASE("godel sentence is its own diagonal substitution") {
  SystemPtr s0 = SystemDef::base();
  DiagResult d = godel_sentence(s0, 1);
  // fixed point identity, recomputed independently through the codec
  FormulaPtr via_codec = substitute(decode_formula(d.p_prime), 0,
                                    FOTerm::numeral(d.p_prime));
  CHECK(d.sentence == via_codec);
  // the open formula has exactly the one free variable v0
  std::set<std::uint64_t> frees = free_variables(d.open_formula);
  REQUIRE(frees.size() == 1);
  CHECK(*frees.begin() == 0);
  // the closed sentence has none
  CHECK(free_variables(d.sentence).empty());
  // and a different code than the open formula
  CHECK(gn_formula(d.sentence) != d.p_prime);
}

TEST_CASE("bounded unprovability of the godel sentence in the base") {
  SystemPtr s0 = SystemDef::base();
  DiagResult d = godel_sentence(s0, 1);
  REQUIRE(d.p_prime.fits_u64());
  for (std::uint64_t b = 0; b <= 2000; ++b)
    CHECK_FALSE(prf_checker(s0, d.p_prime, Nat(b)));
}

TEST_CASE("observe adds one level and the conditional schema") {
  SystemPtr s0 = SystemDef::base();
  SystemPtr s1 = observe(s0);
  CHECK(s1->level() == 1);
  CHECK(s1->below() == s0);
  REQUIRE(s1->admitted_schemas().size() == 1);
  FormulaPtr schema = s1->admitted_schemas()[0];
  REQUIRE(schema->kind() == FormulaKind::Imp);
  CHECK(schema->sub0() == Formula::consys(1));
  CHECK(schema->sub1() == godel_sentence(s0, 1).sentence);
  // the one-line ADMIT proof is accepted in S1
  Proof p;
  p.lines.push_back({schema, ProofLine::Just::Admit, AxiomId::L1, 0, 0, 0, 1});
  CHECK(check_proof(s1, p).accepted);
  // but S0 cannot even express it
  CHECK_FALSE(s0->in_signature(schema));
  CHECK(check_proof(s0, p).reason.empty() == check_proof(s0, p).accepted);
  CHECK_FALSE(check_proof(s0, p).accepted);
}

TEST_CASE("observing corpus checks in S1") {
  SystemPtr s1 = observe(SystemDef::base());
  for (const auto& [name, proof] : goedel::testing::observing_corpus(s1)) {
    CheckResult r = check_proof(s1, proof);
    INFO(name, ": ", r.reason);
    CHECK(r.accepted);
  }
}

TEST_CASE("translate_proof re-checks the base corpus upward") {
  SystemPtr s0 = SystemDef::base();
  SystemPtr s1 = observe(s0);
  SystemPtr s2 = observe(s1);
  for (const auto& [name, proof] : goedel::testing::base_corpus()) {
    Proof up = translate_proof(s0, proof);
    CHECK(check_proof(s1, up).accepted);
    Proof upup = translate_proof(s1, up);
    CHECK(check_proof(s2, upup).accepted);
  }
}

TEST_CASE("translate_proof refuses rejected proofs") {
  SystemPtr s0 = SystemDef::base();
  Proof bad = parse_proof("1. (S(0) = 0) ; AX E1\n");
  CHECK_THROWS_AS(translate_proof(s0, bad), std::invalid_argument);
}

TEST_CASE("tower(3) spec properties") {
  auto levels = tower(3);
  REQUIRE(levels.size() == 3);
  for (std::uint64_t k = 0; k < 3; ++k) {
    CHECK(levels[k].system->level() == k + 1);
    CHECK(levels[k].diag.atom_tag == k + 1);
    // each conditional proof is a single accepted ADMIT line
    REQUIRE(levels[k].conditional.lines.size() == 1);
    CHECK(levels[k].conditional.lines[0].kind == ProofLine::Just::Admit);
    CHECK(check_proof(levels[k].system, levels[k].conditional).accepted);
  }
  // pairwise distinct diagonal codes and sentences
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CHECK(levels[i].diag.p_prime != levels[j].diag.p_prime);
      CHECK(levels[i].diag.sentence != levels[j].diag.sentence);
    }
  // tower(1) is exactly the single observe step
  auto one = tower(1);
  CHECK(one.size() == 1);
  CHECK(one[0].diag.p_prime == levels[0].diag.p_prime);
  // level freshness: the level-2 sentence uses a different atom tag
  CHECK(levels[1].diag.atom_tag != levels[0].diag.atom_tag);
}

TEST_CASE("mutation corpus is rejected at the corrupted line") {
  SystemPtr s0 = SystemDef::base();
  SystemPtr s1 = observe(s0);
  auto positive = goedel::testing::base_corpus();
  auto observing = goedel::testing::observing_corpus(s1);
  auto check_mutations = [](const SystemPtr& sys, const auto& corpus) {
    for (const auto& [name, mut] : goedel::testing::mutation_corpus(corpus)) {
      CheckResult r = check_proof(sys, mut.first);
      INFO(name);
      CHECK_FALSE(r.accepted);
      CHECK(r.line == mut.second);
    }
  };
  check_mutations(s0, positive);
  check_mutations(s1, observing);
}

}  // TEST_SUITE
