#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "goedel/nat.hpp"

namespace goedel {

// Program syntax: thirteen constructors denoting unary partial functions
// over the naturals. Multi-argument data travels through Cantor pairs.
enum class TermKind : std::uint8_t {
  Zero,   // x -> 0
  Succ,   // x -> x + 1
  Pred,   // x -> x - 1 (monus)
  Id,     // x -> x
  Proj1,  // x -> left of unpair(x)
  Proj2,  // x -> right of unpair(x)
  Univ,   // x -> phi_e(a) where (e, a) = unpair(x)
  Const,  // x -> n
  Mu,     // x -> least y with body(pair(y, x)) = 0
  Pair,   // x -> pair(f(x), g(x))
  Comp,   // x -> f(g(x))
  Rec,    // x -> primitive recursion, see eval
  IfZ,    // x -> then(x) if cond(x) = 0 else else_(x)
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable, hash-consed term tree. Structurally equal terms are the same
// object, so syntactic comparison is pointer comparison.
class Term {
 public:
  TermKind kind() const { return kind_; }
  const Nat& value() const { return value_; }   // Const payload
  const TermPtr& child0() const { return a_; }  // Mu body / Pair f / Comp f / Rec base / IfZ cond
  const TermPtr& child1() const { return b_; }  // Pair g / Comp g / Rec step / IfZ then
  const TermPtr& child2() const { return c_; }  // IfZ else
  std::size_t hash() const { return hash_; }
  unsigned height() const { return height_; }

  static const TermPtr& zero();
  static const TermPtr& succ();
  static const TermPtr& pred();
  static const TermPtr& id();
  static const TermPtr& proj1();
  static const TermPtr& proj2();
  static const TermPtr& univ();
  static TermPtr constant(Nat n);
  static TermPtr mu(TermPtr body);
  static TermPtr pair(TermPtr f, TermPtr g);
  static TermPtr comp(TermPtr f, TermPtr g);
  static TermPtr rec(TermPtr base, TermPtr step);
  static TermPtr ifz(TermPtr cond, TermPtr then, TermPtr els);

  struct MakeKey;

 private:
  friend struct MakeKey;
  Term(TermKind k, Nat v, TermPtr a, TermPtr b, TermPtr c, std::size_t h,
       unsigned height)
      : kind_(k), value_(std::move(v)), a_(std::move(a)), b_(std::move(b)),
        c_(std::move(c)), hash_(h), height_(height) {}

  TermKind kind_;
  Nat value_;
  TermPtr a_, b_, c_;
  std::size_t hash_;
  unsigned height_;
};

inline bool same_term(const TermPtr& a, const TermPtr& b) { return a == b; }

// Canonical text form: lowercase keywords, comma separated, no whitespace.
// Const payloads print as decimal when the value is materialized and as the
// numeral expression form otherwise; the parser accepts both.
std::string print_term(const TermPtr& t);
TermPtr parse_term(std::string_view text);

}  // namespace goedel
