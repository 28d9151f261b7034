#include "doctest.h"

#include <random>

#include "goedel/eval.hpp"
#include "goedel/machine_lib.hpp"
#include "term_gen.hpp"

using namespace goedel;

namespace {
EvalOutcome ev(const TermPtr& t, std::uint64_t x, std::uint64_t fuel = 100) {
  return eval(t, Nat(x), Fuel(fuel));
}
}

TEST_SUITE("eval") {

TEST_CASE("primitive semantics") {
  CHECK(ev(Term::succ(), 5) == EvalOutcome::make_halted(Nat(6)));
  CHECK(ev(Term::zero(), 7) == EvalOutcome::make_halted(Nat(0)));
  CHECK(ev(Term::pred(), 0) == EvalOutcome::make_halted(Nat(0)));
  CHECK(ev(Term::pred(), 9) == EvalOutcome::make_halted(Nat(8)));
  CHECK(ev(Term::id(), 41) == EvalOutcome::make_halted(Nat(41)));
  CHECK(ev(Term::proj1(), 8) == EvalOutcome::make_halted(Nat(1)));
  CHECK(ev(Term::proj2(), 8) == EvalOutcome::make_halted(Nat(2)));
  CHECK(ev(Term::constant(Nat(12)), 3) == EvalOutcome::make_halted(Nat(12)));
}

TEST_CASE("spec examples for eval") {
  CHECK(ev(Term::comp(Term::succ(), Term::succ()), 3) ==
        EvalOutcome::make_halted(Nat(5)));
  // (Univ, pair(1, 5)) -> decode(1) = succ applied to 5
  CHECK(eval(Term::univ(), Nat::pair(1, 5), Fuel(100)) ==
        EvalOutcome::make_halted(Nat(6)));
  // (Mu(Proj1), 9) -> least y with proj1(pair(y, 9)) = y = 0
  CHECK(ev(Term::mu(Term::proj1()), 9) == EvalOutcome::make_halted(Nat(0)));
}

TEST_CASE("spec examples for eval_index") {
  CHECK(eval_index(CodeIndex(Nat(1)), Nat(5), Fuel(100)) ==
        EvalOutcome::make_halted(Nat(6)));
  CHECK(eval_index(CodeIndex(Nat(0)), Nat(7), Fuel(100)) ==
        EvalOutcome::make_halted(Nat(0)));
  Nat diverging = encode(Term::mu(Term::constant(Nat(1)))).value;
  EvalOutcome out = eval_index(CodeIndex(diverging), Nat(0), Fuel(50));
  CHECK_FALSE(out.halted());
  CHECK(out.consumed() == Nat(50));
}

TEST_CASE("run_enumerator spec examples") {
  Nat const3 = encode(Term::constant(Nat(3))).value;
  auto outs = run_enumerator(CodeIndex(const3), 3, Fuel(100));
  REQUIRE(outs.size() == 3);
  for (const auto& o : outs) CHECK(o == EvalOutcome::make_halted(Nat(3)));

  auto succs = run_enumerator(CodeIndex(Nat(1)), 2, Fuel(100));
  CHECK(succs[0] == EvalOutcome::make_halted(Nat(2)));
  CHECK(succs[1] == EvalOutcome::make_halted(Nat(3)));

  Nat diverging = encode(Term::mu(Term::constant(Nat(1)))).value;
  auto d = run_enumerator(CodeIndex(diverging), 1, Fuel(50));
  CHECK_FALSE(d[0].halted());
}

TEST_CASE("ifz branches on zero") {
  TermPtr t = Term::ifz(Term::pred(), Term::constant(Nat(99)),
                        Term::comp(Term::constant(Nat(3)), Term::pred()));
  CHECK(ev(t, 1) == EvalOutcome::make_halted(Nat(99)));
  CHECK(ev(t, 0) == EvalOutcome::make_halted(Nat(99)));
  CHECK(ev(t, 2) == EvalOutcome::make_halted(Nat(3)));
}

TEST_CASE("rec implements primitive recursion (addition oracle)") {
  const TermPtr& add = mlib::add_term();
  for (std::uint64_t n = 0; n <= 30; ++n)
    for (std::uint64_t a = 0; a <= 30; a += 3) {
      EvalOutcome out = eval(add, Nat::pair(n, a), Fuel(100000));
      REQUIRE(out.halted());
      CHECK(out.value() == Nat(n + a));
    }
}

TEST_CASE("determinism: identical runs give identical outcomes") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 200; ++i) {
    TermPtr t = goedel::testing::random_term(rng, 5);
    Nat x(rng() % 50);
    EvalOutcome a = eval(t, x, Fuel(2000));
    EvalOutcome b = eval(t, x, Fuel(2000));
    CHECK(a == b);
  }
}

TEST_CASE("fuel monotonicity: halting outcomes survive larger budgets") {
  std::mt19937_64 rng(99);
  int halted_seen = 0;
  for (int i = 0; i < 400 && halted_seen < 150; ++i) {
    TermPtr t = goedel::testing::random_term(rng, 5);
    Nat x(rng() % 50);
    EvalOutcome small = eval(t, x, Fuel(300));
    if (!small.halted()) continue;
    ++halted_seen;
    for (std::uint64_t extra : {301ull, 1000ull, 100000ull}) {
      EvalOutcome big = eval(t, x, Fuel(extra));
      REQUIRE(big.halted());
      CHECK(big.value() == small.value());
    }
  }
  CHECK(halted_seen >= 100);
}

TEST_CASE("universality on random terms") {
  std::mt19937_64 rng(1234);
  int agreed = 0;
  for (int i = 0; i < 300; ++i) {
    TermPtr t = goedel::testing::random_term(rng, 5);
    Nat x(rng() % 50);
    EvalOutcome direct = eval(t, x, Fuel(1000000));
    EvalOutcome via_univ =
        eval(Term::univ(), Nat::pair(encode(t).value, x), Fuel(1000000));
    if (direct.halted() && via_univ.halted()) {
      CHECK(direct.value() == via_univ.value());
      ++agreed;
    } else {
      // both sides must agree on exhaustion under a shared generous budget
      CHECK(direct.halted() == via_univ.halted());
    }
  }
  CHECK(agreed >= 200);
}

TEST_CASE("fuel accounting is exact on small programs") {
  // succ costs exactly 1
  CHECK(eval(Term::succ(), Nat(0), Fuel(1)).halted());
  CHECK_FALSE(eval(Term::succ(), Nat(0), Fuel(0)).halted());
  // comp(succ, succ) costs exactly 3
  TermPtr ss = Term::comp(Term::succ(), Term::succ());
  CHECK(eval(ss, Nat(0), Fuel(3)).halted());
  CHECK_FALSE(eval(ss, Nat(0), Fuel(2)).halted());
  // mu(proj1) at 9: entry + first trial + proj1 = 3
  TermPtr mp = Term::mu(Term::proj1());
  CHECK(eval(mp, Nat(9), Fuel(3)).halted());
  CHECK_FALSE(eval(mp, Nat(9), Fuel(2)).halted());
  // univ adds exactly one unit over the decoded program
  TermPtr uv = Term::univ();
  CHECK(eval(uv, Nat::pair(1, 5), Fuel(2)).halted());
  CHECK_FALSE(eval(uv, Nat::pair(1, 5), Fuel(1)).halted());
}

TEST_CASE("out-of-fuel reports the full budget as consumed") {
  Nat diverging = encode(Term::mu(Term::constant(Nat(1)))).value;
  for (std::uint64_t f : {1ull, 17ull, 500ull}) {
    EvalOutcome out = eval_index(CodeIndex(diverging), Nat(0), Fuel(f));
    REQUIRE_FALSE(out.halted());
    CHECK(out.consumed() == Nat(f));
  }
}

}  // TEST_SUITE
