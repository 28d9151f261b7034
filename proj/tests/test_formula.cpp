#include "doctest.h"

#include <functional>
#include <random>

#include "goedel/formula.hpp"

using namespace goedel;

namespace {

FOTermPtr random_fo_term(std::mt19937_64& rng, unsigned depth) {
  if (depth <= 1) {
    switch (rng() % 3) {
      case 0: return FOTerm::zero();
      case 1: return FOTerm::var(rng() % 4);
      default: return FOTerm::numeral(Nat(rng() % 6));
    }
  }
  switch (rng() % 4) {
    case 0: return FOTerm::succ(random_fo_term(rng, depth - 1));
    case 1: return FOTerm::plus(random_fo_term(rng, depth - 1),
                                random_fo_term(rng, depth - 1));
    case 2: return FOTerm::times(random_fo_term(rng, depth - 1),
                                 random_fo_term(rng, depth - 1));
    default: return random_fo_term(rng, 1);
  }
}

FormulaPtr random_formula(std::mt19937_64& rng, unsigned depth) {
  if (depth <= 1) {
    switch (rng() % 3) {
      case 0:
        return Formula::eq(random_fo_term(rng, 2), random_fo_term(rng, 2));
      case 1:
        return Formula::atom(1 + rng() % 3, random_fo_term(rng, 2),
                             random_fo_term(rng, 2));
      default:
        return Formula::consys(1 + rng() % 3);
    }
  }
  switch (rng() % 4) {
    case 0: return Formula::lnot(random_formula(rng, depth - 1));
    case 1: return Formula::imp(random_formula(rng, depth - 1),
                                random_formula(rng, depth - 1));
    case 2: return Formula::all(rng() % 4, random_formula(rng, depth - 1));
    default: return random_formula(rng, 1);
  }
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("parsing the spec examples") {
  FormulaPtr f = parse_formula("all v0. ~(S(0) = 0)");
  CHECK(f == Formula::all(0, Formula::lnot(Formula::eq(
                                 FOTerm::succ(FOTerm::zero()),
                                 FOTerm::zero()))));
  CHECK(print_formula(Formula::eq(FOTerm::zero(), FOTerm::zero())) ==
        "(0 = 0)");
  CHECK(parse_formula("A1(0, v2)") ==
        Formula::atom(1, FOTerm::zero(), FOTerm::var(2)));
  CHECK(parse_formula("Consys2") == Formula::consys(2));
  CHECK(parse_formula("((0 + v1) = (v1 * S(0)))") ==
        Formula::eq(FOTerm::plus(FOTerm::zero(), FOTerm::var(1)),
                    FOTerm::times(FOTerm::var(1),
                                  FOTerm::succ(FOTerm::zero()))));
}

TEST_CASE("print/parse round trip on random formulas") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1500; ++i) {
    FormulaPtr f = random_formula(rng, 6);
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("numeral run-length printing round trips") {
  CHECK(print_fo_term(FOTerm::numeral(Nat(3))) == "S(S(S(0)))");
  FOTermPtr big = FOTerm::numeral(Nat(250000000));
  std::string s = print_fo_term(big);
  CHECK(s == "S^250000000(0)");
  FormulaPtr f = Formula::eq(big, big);
  CHECK(parse_formula(print_formula(f)) == f);
}

TEST_CASE("gn examples and inverses") {
  CHECK(decode_formula(Nat(0)) ==
        Formula::eq(FOTerm::zero(), FOTerm::zero()));
  CHECK(gn_formula(Formula::eq(FOTerm::zero(), FOTerm::zero())) == Nat(0));
  // gn(eq(v0, v0)) = 5 * pair(1, 1) = 20
  CHECK(gn_formula(Formula::eq(FOTerm::var(0), FOTerm::var(0))) == Nat(20));
}

TEST_CASE("gn(decode_formula(n)) == n for n <= 100000") {
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    CHECK(gn_formula(decode_formula(Nat(n))) == Nat(n));
  }
}

TEST_CASE("decode(gn(f)) == f on random formulas") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 800; ++i) {
    FormulaPtr f = random_formula(rng, 6);
    CHECK(decode_formula(gn_formula(f)) == f);
  }
}

TEST_CASE("term codec agrees with the iterated formula") {
  // gn(numeral(n)) iterates c -> 4c + 2 from zero
  Nat c;
  for (std::uint64_t n = 0; n <= 12; ++n) {
    CHECK(gn_term(FOTerm::numeral(Nat(n))) == c);
    c = c.mul_u64(4).add_u64(2);
  }
  // var codes 4k + 1
  CHECK(gn_term(FOTerm::var(0)) == Nat(1));
  CHECK(gn_term(FOTerm::var(7)) == Nat(29));
}

TEST_CASE("substitution spec examples") {
  FormulaPtr f = Formula::eq(FOTerm::var(0), FOTerm::zero());
  CHECK(substitute(f, 0, FOTerm::numeral(Nat(2))) ==
        Formula::eq(FOTerm::numeral(Nat(2)), FOTerm::zero()));
  // no free occurrence: identity
  CHECK(substitute(f, 3, FOTerm::numeral(Nat(9))) == f);
  // bound occurrence: identity
  FormulaPtr bound = Formula::all(0, f);
  CHECK(substitute(bound, 0, FOTerm::numeral(Nat(9))) == bound);
}

TEST_CASE("substitution refuses capture") {
  // substituting v1 into all v1. (v0 = v1) would capture
  FormulaPtr f = Formula::all(
      1, Formula::eq(FOTerm::var(0), FOTerm::var(1)));
  CHECK_THROWS_AS(substitute(f, 0, FOTerm::var(1)), std::invalid_argument);
  CHECK(free_for(FOTerm::var(2), 0, f));
  CHECK_FALSE(free_for(FOTerm::var(1), 0, f));
  // numerals always qualify
  CHECK(free_for(FOTerm::numeral(Nat(5)), 0, f));
}

TEST_CASE("substitution free-variable bookkeeping") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    FormulaPtr f = random_formula(rng, 5);
    std::uint64_t k = rng() % 4;
    FOTermPtr t = random_fo_term(rng, 3);
    auto before = free_variables(f);
    if (!before.count(k)) {
      CHECK(substitute(f, k, t) == f);
      continue;
    }
    if (!free_for(t, k, f)) continue;
    auto after = free_variables(substitute(f, k, t));
    std::set<std::uint64_t> expect = before;
    expect.erase(k);
    for (std::uint64_t v : term_variables(t)) expect.insert(v);
    CHECK(after == expect);
  }
}

TEST_CASE("closed substitution keeps bound structure") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = random_formula(rng, 5);
    FOTermPtr numeral = FOTerm::numeral(Nat(rng() % 50));
    FormulaPtr g = substitute(f, rng() % 4, numeral);
    // structure of binders unchanged
    std::function<std::string(const FormulaPtr&)> skeleton =
        [&](const FormulaPtr& h) -> std::string {
      switch (h->kind()) {
        case FormulaKind::All:
          return "A" + std::to_string(h->bound_var()) + skeleton(h->sub0());
        case FormulaKind::Not: return "N" + skeleton(h->sub0());
        case FormulaKind::Imp:
          return "I(" + skeleton(h->sub0()) + "," + skeleton(h->sub1()) + ")";
        default: return "x";
      }
    };
    CHECK(skeleton(f) == skeleton(g));
  }
}

}  // TEST_SUITE
