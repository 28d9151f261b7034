#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "goedel/nat.hpp"

namespace goedel {

class FOTerm;
using FOTermPtr = std::shared_ptr<const FOTerm>;

// Arithmetic term language: variables, zero, successor, sum, product.
// Successor chains are run-length compressed so numerals of desk-scale
// Godel numbers stay O(1) in memory; semantically succ_count applications
// of S to the child.
enum class FOTermKind : std::uint8_t { Var, Zero, Succ, Plus, Times };

class FOTerm {
 public:
  FOTermKind kind() const { return kind_; }
  std::uint64_t var_index() const { return var_; }
  const Nat& succ_count() const { return count_; }
  const FOTermPtr& left() const { return a_; }   // Succ child / Plus / Times
  const FOTermPtr& right() const { return b_; }

  static const FOTermPtr& zero();
  static FOTermPtr var(std::uint64_t k);
  static FOTermPtr succ(FOTermPtr t);             // one application, merges
  static FOTermPtr succ_n(Nat count, FOTermPtr t);
  static FOTermPtr plus(FOTermPtr t, FOTermPtr u);
  static FOTermPtr times(FOTermPtr t, FOTermPtr u);
  static FOTermPtr numeral(Nat n);

  struct MakeKey;

 private:
  friend struct MakeKey;
  FOTerm(FOTermKind k, std::uint64_t v, Nat c, FOTermPtr a, FOTermPtr b)
      : kind_(k), var_(v), count_(std::move(c)), a_(std::move(a)),
        b_(std::move(b)) {}
  FOTermKind kind_;
  std::uint64_t var_;
  Nat count_;
  FOTermPtr a_, b_;
};

// If t is a numeral (a pure successor chain over zero), its value.
std::optional<Nat> numeral_value(const FOTermPtr& t);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind : std::uint8_t { Eq, Atom, Consys, Not, Imp, All };

// Formulas over the arithmetic terms plus checker-backed binary atoms
// A<tag>(t, u) and the nullary admitted-hypothesis atoms Consys<tag>.
// Atom tags are >= 1; tag 0 is reserved by the numbering for Consys.
class Formula {
 public:
  FormulaKind kind() const { return kind_; }
  std::uint64_t tag() const { return tag_; }        // Atom/Consys
  std::uint64_t bound_var() const { return tag_; }  // All
  const FOTermPtr& term0() const { return t_; }
  const FOTermPtr& term1() const { return u_; }
  const FormulaPtr& sub0() const { return f_; }  // Not/Imp/All body
  const FormulaPtr& sub1() const { return g_; }  // Imp consequent

  static FormulaPtr eq(FOTermPtr t, FOTermPtr u);
  static FormulaPtr atom(std::uint64_t tag, FOTermPtr t, FOTermPtr u);
  static FormulaPtr consys(std::uint64_t tag);
  static FormulaPtr lnot(FormulaPtr f);
  static FormulaPtr imp(FormulaPtr f, FormulaPtr g);
  static FormulaPtr all(std::uint64_t var, FormulaPtr f);

  struct MakeKey;

 private:
  friend struct MakeKey;
  Formula(FormulaKind k, std::uint64_t tag, FOTermPtr t, FOTermPtr u,
          FormulaPtr f, FormulaPtr g)
      : kind_(k), tag_(tag), t_(std::move(t)), u_(std::move(u)),
        f_(std::move(f)), g_(std::move(g)) {}
  FormulaKind kind_;
  std::uint64_t tag_;
  FOTermPtr t_, u_;
  FormulaPtr f_, g_;
};

std::set<std::uint64_t> free_variables(const FormulaPtr& f);
std::set<std::uint64_t> term_variables(const FOTermPtr& t);

// Capture-avoiding substitution of t for the free occurrences of var k.
// Throws std::invalid_argument when t is not free for var k in f
// (numerals, being closed, always qualify).
FormulaPtr substitute(const FormulaPtr& f, std::uint64_t k,
                      const FOTermPtr& t);
FOTermPtr substitute_term(const FOTermPtr& u, std::uint64_t k,
                          const FOTermPtr& t);
bool free_for(const FOTermPtr& t, std::uint64_t k, const FormulaPtr& f);

// Godel numbering of terms and formulas; decode is total on naturals.
Nat gn_term(const FOTermPtr& t);
FOTermPtr decode_term(const Nat& n);
Nat gn_formula(const FormulaPtr& f);
FormulaPtr decode_formula(const Nat& n);

// Canonical text; see the grammar in the README. print/parse round trip.
std::string print_formula(const FormulaPtr& f);
FormulaPtr parse_formula(std::string_view text);
std::string print_fo_term(const FOTermPtr& t);

}  // namespace goedel
