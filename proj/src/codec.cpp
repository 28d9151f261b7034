#include "goedel/codec.hpp"

#include <array>
#include <mutex>
#include <unordered_map>

namespace goedel {

namespace {

constexpr std::array<TermKind, 7> kNullary = {
    TermKind::Zero, TermKind::Succ, TermKind::Pred,  TermKind::Id,
    TermKind::Proj1, TermKind::Proj2, TermKind::Univ};

const TermPtr& nullary_term(unsigned code) {
  switch (kNullary[code]) {
    case TermKind::Zero: return Term::zero();
    case TermKind::Succ: return Term::succ();
    case TermKind::Pred: return Term::pred();
    case TermKind::Id: return Term::id();
    case TermKind::Proj1: return Term::proj1();
    case TermKind::Proj2: return Term::proj2();
    default: return Term::univ();
  }
}

Nat composite_code(unsigned r, const Nat& q) {
  return q.mul_u64(6).add_u64(7 + r);
}

// Decoding the same index over and over is common (index searches, the
// creative loop re-decoding its live enumerator), so cache small codes
// densely and large ones by node identity.
struct DecodeCache {
  std::mutex m;
  std::unordered_map<std::uint64_t, TermPtr> small;
  // keyed by owning pointer so node addresses cannot be recycled under us
  std::unordered_map<detail::NodePtr, TermPtr> large;
};

DecodeCache& cache() {
  static DecodeCache* c = new DecodeCache;
  return *c;
}

TermPtr decode_uncached(const Nat& i);

TermPtr decode_payload(unsigned r, const Nat& q) {
  switch (r) {
    case 0:
      return Term::constant(q);
    case 1:
      return Term::mu(decode(q));
    case 2: {
      auto [f, g] = q.unpair();
      return Term::pair(decode(f), decode(g));
    }
    case 3: {
      auto [f, g] = q.unpair();
      return Term::comp(decode(f), decode(g));
    }
    case 4: {
      auto [c, rest] = q.unpair();
      auto [a, b] = rest.unpair();
      return Term::ifz(decode(c), decode(a), decode(b));
    }
    default: {
      auto [base, step] = q.unpair();
      return Term::rec(decode(base), decode(step));
    }
  }
}

TermPtr decode_uncached(const Nat& i) {
  if (i.fits_u64()) {
    std::uint64_t v = i.as_u64();
    if (v <= 6) return nullary_term((unsigned)v);
    std::uint64_t m = v - 7;
    return decode_payload((unsigned)(m % 6), Nat(m / 6));
  }
  // Structural route: an affine node 6q + add directly exposes the payload.
  if (auto parts = i.affine_parts()) {
    auto [mul, add, x] = *parts;
    if (mul % 6 == 0 && add >= 7) {
      std::uint64_t r = (add - 7) % 6;
      std::uint64_t shift = (add - 7) / 6;
      Nat q = x.mul_u64(mul / 6).add_u64(shift);
      return decode_payload((unsigned)r, q);
    }
  }
  // Materialized route: plain arithmetic. Refuse runaway values; program
  // indices that large always arrive with structure.
  if (i.log2_bounds().second > 262144.0 && !i.affine_parts())
    throw ResourceError("decode of a huge unstructured value");
  Nat m = Nat::sub(i, Nat(7));
  auto [q, r] = m.divmod_u64(6);
  return decode_payload((unsigned)r, q);
}

}  // namespace

CodeIndex encode(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Zero: return CodeIndex(Nat(0));
    case TermKind::Succ: return CodeIndex(Nat(1));
    case TermKind::Pred: return CodeIndex(Nat(2));
    case TermKind::Id: return CodeIndex(Nat(3));
    case TermKind::Proj1: return CodeIndex(Nat(4));
    case TermKind::Proj2: return CodeIndex(Nat(5));
    case TermKind::Univ: return CodeIndex(Nat(6));
    case TermKind::Const:
      return CodeIndex(composite_code(0, t->value()));
    case TermKind::Mu:
      return CodeIndex(composite_code(1, encode(t->child0()).value));
    case TermKind::Pair:
      return CodeIndex(composite_code(
          2, Nat::pair(encode(t->child0()).value, encode(t->child1()).value)));
    case TermKind::Comp:
      return CodeIndex(composite_code(
          3, Nat::pair(encode(t->child0()).value, encode(t->child1()).value)));
    case TermKind::IfZ:
      return CodeIndex(composite_code(
          4, Nat::pair(encode(t->child0()).value,
                       Nat::pair(encode(t->child1()).value,
                                 encode(t->child2()).value))));
    case TermKind::Rec:
      return CodeIndex(composite_code(
          5, Nat::pair(encode(t->child0()).value, encode(t->child1()).value)));
  }
  throw std::logic_error("unreachable term kind");
}

TermPtr decode(const Nat& i) {
  DecodeCache& c = cache();
  if (i.fits_u64()) {
    std::uint64_t v = i.as_u64();
    {
      std::lock_guard<std::mutex> g(c.m);
      auto it = c.small.find(v);
      if (it != c.small.end()) return it->second;
    }
    TermPtr t = decode_uncached(i);
    std::lock_guard<std::mutex> g(c.m);
    c.small.emplace(v, t);
    return t;
  }
  {
    std::lock_guard<std::mutex> g(c.m);
    auto it = c.large.find(i.node());
    if (it != c.large.end()) return it->second;
  }
  TermPtr t = decode_uncached(i);
  std::lock_guard<std::mutex> g(c.m);
  c.large.emplace(i.node(), t);
  return t;
}

TermPtr decode(const CodeIndex& i) { return decode(i.value); }

}  // namespace goedel
