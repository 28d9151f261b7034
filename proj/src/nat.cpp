#include "goedel/nat.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <mutex>

namespace goedel {
namespace detail {

using Limbs = std::vector<std::uint64_t>;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Limb-vector arithmetic (little-endian base 2^64, normalized: no top zeros).
// ---------------------------------------------------------------------------

static void normalize(Limbs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

static int cmp_limbs(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

static Limbs add_limbs(const Limbs& a, const Limbs& b) {
  const Limbs& lo = a.size() < b.size() ? a : b;
  const Limbs& hi = a.size() < b.size() ? b : a;
  Limbs r(hi.size() + 1, 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    u128 s = (u128)hi[i] + (i < lo.size() ? lo[i] : 0) + carry;
    r[i] = (u64)s;
    carry = (u64)(s >> 64);
  }
  r[hi.size()] = carry;
  normalize(r);
  return r;
}

// a - b, requires a >= b
static Limbs sub_limbs(const Limbs& a, const Limbs& b) {
  Limbs r(a.size(), 0);
  u64 borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 bi = i < b.size() ? b[i] : 0;
    u64 ai = a[i];
    u64 d = ai - bi;
    u64 nb = (ai < bi) ? 1 : 0;
    u64 d2 = d - borrow;
    if (d < borrow) nb = 1;
    r[i] = d2;
    borrow = nb;
  }
  normalize(r);
  return r;
}

static Limbs mul_small_limbs(const Limbs& a, u64 m) {
  if (m == 0 || a.empty()) return {};
  Limbs r(a.size() + 1, 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    u128 p = (u128)a[i] * m + carry;
    r[i] = (u64)p;
    carry = (u64)(p >> 64);
  }
  r[a.size()] = carry;
  normalize(r);
  return r;
}

static Limbs add_small_limbs(const Limbs& a, u64 c) {
  Limbs r = a;
  u128 carry = c;
  for (std::size_t i = 0; i < r.size() && carry; ++i) {
    u128 s = (u128)r[i] + carry;
    r[i] = (u64)s;
    carry = s >> 64;
  }
  if (carry) r.push_back((u64)carry);
  normalize(r);
  return r;
}

static Limbs mul_school(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    u64 carry = 0;
    u64 ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u128 cur = (u128)ai * b[j] + r[i + j] + carry;
      r[i + j] = (u64)cur;
      carry = (u64)(cur >> 64);
    }
    r[i + b.size()] += carry;
  }
  normalize(r);
  return r;
}

static Limbs mul_limbs(const Limbs& a, const Limbs& b);

static Limbs kara_shifted_add(Limbs base, const Limbs& part, std::size_t shift) {
  if (base.size() < part.size() + shift) base.resize(part.size() + shift, 0);
  u64 carry = 0;
  std::size_t i = 0;
  for (; i < part.size(); ++i) {
    u128 s = (u128)base[shift + i] + part[i] + carry;
    base[shift + i] = (u64)s;
    carry = (u64)(s >> 64);
  }
  while (carry) {
    if (shift + i >= base.size()) base.push_back(0);
    u128 s = (u128)base[shift + i] + carry;
    base[shift + i] = (u64)s;
    carry = (u64)(s >> 64);
    ++i;
  }
  normalize(base);
  return base;
}

static constexpr std::size_t kKaratsubaCutoff = 40;

static Limbs mul_limbs(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaCutoff) return mul_school(a, b);
  std::size_t half = (std::max(a.size(), b.size()) + 1) / 2;
  Limbs a0(a.begin(), a.begin() + std::min(half, a.size()));
  Limbs a1(a.begin() + std::min(half, a.size()), a.end());
  Limbs b0(b.begin(), b.begin() + std::min(half, b.size()));
  Limbs b1(b.begin() + std::min(half, b.size()), b.end());
  normalize(a0);
  normalize(b0);
  Limbs z0 = mul_limbs(a0, b0);
  Limbs z2 = mul_limbs(a1, b1);
  Limbs sa = add_limbs(a0, a1);
  Limbs sb = add_limbs(b0, b1);
  Limbs z1 = mul_limbs(sa, sb);
  z1 = sub_limbs(z1, z0);
  z1 = sub_limbs(z1, z2);
  Limbs r = z0;
  r = kara_shifted_add(std::move(r), z1, half);
  r = kara_shifted_add(std::move(r), z2, 2 * half);
  return r;
}

static u64 bitlen_limbs(const Limbs& a) {
  if (a.empty()) return 0;
  return (u64)(a.size() - 1) * 64 + (64 - std::countl_zero(a.back()));
}

static Limbs shl_limbs(const Limbs& a, unsigned bits) {
  if (a.empty()) return {};
  unsigned words = bits / 64, rem = bits % 64;
  Limbs r(a.size() + words + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + words] |= rem ? (a[i] << rem) : a[i];
    if (rem) r[i + words + 1] |= a[i] >> (64 - rem);
  }
  normalize(r);
  return r;
}

static Limbs shr_limbs(const Limbs& a, unsigned bits) {
  unsigned words = bits / 64, rem = bits % 64;
  if (words >= a.size()) return {};
  Limbs r(a.size() - words, 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = a[i + words] >> rem;
    if (rem && i + words + 1 < a.size()) r[i] |= a[i + words + 1] << (64 - rem);
  }
  normalize(r);
  return r;
}

static std::pair<Limbs, u64> divmod_small_limbs(const Limbs& a, u64 d) {
  Limbs q(a.size(), 0);
  u128 rem = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    u128 cur = (rem << 64) | a[i];
    q[i] = (u64)(cur / d);
    rem = cur % d;
  }
  normalize(q);
  return {q, (u64)rem};
}

// Knuth algorithm D. Requires b non-empty.
static std::pair<Limbs, Limbs> divmod_limbs(const Limbs& a, const Limbs& b) {
  if (b.empty()) throw std::invalid_argument("division by zero");
  if (cmp_limbs(a, b) < 0) return {{}, a};
  if (b.size() == 1) {
    auto [q, r] = divmod_small_limbs(a, b[0]);
    Limbs rr;
    if (r) rr.push_back(r);
    return {q, rr};
  }
  unsigned shift = std::countl_zero(b.back());
  Limbs u = shl_limbs(a, shift);
  Limbs v = shl_limbs(b, shift);
  std::size_t n = v.size();
  std::size_t m = u.size() - n;
  u.resize(u.size() + 1, 0);
  Limbs q(m + 1, 0);
  u64 vtop = v[n - 1], vsec = v[n - 2];
  for (std::size_t jj = m + 1; jj-- > 0;) {
    std::size_t j = jj;
    u128 num = ((u128)u[j + n] << 64) | u[j + n - 1];
    u64 qhat, rhat;
    bool rhat_big = false;
    if (u[j + n] >= vtop) {
      qhat = ~(u64)0;
      u128 r2 = num - (u128)qhat * vtop;
      if (r2 >> 64) {
        rhat_big = true;
        rhat = 0;
      } else {
        rhat = (u64)r2;
      }
    } else {
      qhat = (u64)(num / vtop);
      rhat = (u64)(num % vtop);
    }
    if (!rhat_big) {
      while ((u128)qhat * vsec > (((u128)rhat << 64) | u[j + n - 2])) {
        --qhat;
        u128 nr = (u128)rhat + vtop;
        if (nr >> 64) break;
        rhat = (u64)nr;
      }
    }
    // multiply and subtract qhat * v from u[j .. j+n]
    u128 borrow = 0, carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u128 p = (u128)qhat * v[i] + carry;
      carry = p >> 64;
      u64 plo = (u64)p;
      u64 ui = u[j + i];
      u64 d = ui - plo;
      u64 nb = ui < plo ? 1 : 0;
      u64 d2 = d - (u64)borrow;
      if (d < (u64)borrow) nb = 1;
      u[j + i] = d2;
      borrow = nb;
    }
    u128 top = (u128)u[j + n] - carry - borrow;
    u[j + n] = (u64)top;
    if (top >> 64) {
      // went negative: add back one v
      --qhat;
      u128 c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        u128 s = (u128)u[j + i] + v[i] + c2;
        u[j + i] = (u64)s;
        c2 = s >> 64;
      }
      u[j + n] = (u64)((u128)u[j + n] + c2);
    }
    q[j] = qhat;
  }
  normalize(q);
  u.resize(n);
  normalize(u);
  Limbs r = shr_limbs(u, shift);
  return {q, r};
}

// floor(sqrt(a)) by Newton iteration from an over-estimate.
static Limbs isqrt_limbs(const Limbs& a) {
  if (a.empty()) return {};
  u64 bl = bitlen_limbs(a);
  if (bl <= 62) {
    u64 v = a[0];
    u64 r = (u64)std::sqrt((double)v);
    while ((u128)(r + 1) * (r + 1) <= v) ++r;
    while ((u128)r * r > v) --r;
    Limbs out;
    if (r) out.push_back(r);
    return out;
  }
  u64 half = (bl + 1) / 2;  // 2^half >= sqrt(a)
  Limbs x = shl_limbs({1}, (unsigned)half);
  while (true) {
    Limbs d = divmod_limbs(a, x).first;
    Limbs nx = shr_limbs(add_limbs(x, d), 1);
    if (cmp_limbs(nx, x) >= 0) break;
    x = std::move(nx);
  }
  return x;
}

static std::string to_decimal_limbs(const Limbs& a);

static const u64 kDecChunk = 10000000000000000000ull;  // 10^19
static const unsigned kDecChunkDigits = 19;

static std::string dec_basecase(Limbs v, u64 pad) {
  std::vector<u64> chunks;
  while (!v.empty()) {
    auto [q, r] = divmod_small_limbs(v, kDecChunk);
    chunks.push_back(r);
    v = std::move(q);
  }
  std::string out;
  if (chunks.empty()) {
    out = "0";
  } else {
    out = std::to_string(chunks.back());
    char buf[24];
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      std::snprintf(buf, sizeof buf, "%019llu", (unsigned long long)chunks[i]);
      out += buf;
    }
  }
  if (out.size() < pad) out.insert(0, std::string(pad - out.size(), '0'));
  return out;
}

// Emits decimal digits of v (v < pows[level]^2), zero-padded to `pad`.
static void dec_recurse(const Limbs& v, int level,
                        const std::vector<Limbs>& pows,
                        const std::vector<u64>& pow_digits, u64 pad,
                        std::string& out) {
  if (level < 0) {
    out += dec_basecase(v, pad);
    return;
  }
  auto [q, r] = divmod_limbs(v, pows[level]);
  u64 low = pow_digits[level];
  if (q.empty()) {
    dec_recurse(r, level - 1, pows, pow_digits, pad, out);
    return;
  }
  dec_recurse(q, level - 1, pows, pow_digits, pad > low ? pad - low : 0, out);
  dec_recurse(r, level - 1, pows, pow_digits, low, out);
}

static std::string to_decimal_limbs(const Limbs& a) {
  if (a.size() <= 64) return dec_basecase(a, 0);
  // powers[k] = 10^(19 * 2^k), up to the largest power not exceeding a
  std::vector<Limbs> pows;
  std::vector<u64> pow_digits;
  Limbs p;
  p.push_back(kDecChunk);
  u64 digits = kDecChunkDigits;
  while (cmp_limbs(p, a) <= 0) {
    pows.push_back(p);
    pow_digits.push_back(digits);
    p = mul_limbs(p, p);
    digits *= 2;
  }
  std::string out;
  dec_recurse(a, (int)pows.size() - 1, pows, pow_digits, 0, out);
  return out;
}

static Limbs from_decimal_limbs(std::string_view text, std::size_t base_off) {
  if (text.empty()) throw ParseError("empty number", base_off);
  Limbs v;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t take = std::min<std::size_t>(kDecChunkDigits, text.size() - i);
    u64 chunk = 0, scale = 1;
    for (std::size_t k = 0; k < take; ++k) {
      char c = text[i + k];
      if (c < '0' || c > '9')
        throw ParseError("expected digit", base_off + i + k);
      chunk = chunk * 10 + (u64)(c - '0');
      scale *= 10;
    }
    v = mul_small_limbs(v, scale);
    v = add_small_limbs(v, chunk);
    i += take;
  }
  return v;
}

static u64 mod_small_limbs(const Limbs& a, u64 m) {
  u128 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    r = ((r << 64) | a[i]) % m;
  }
  return (u64)r;
}

// ---------------------------------------------------------------------------
// Nodes
// ---------------------------------------------------------------------------

enum class Kind : std::uint8_t { Small, Big, Pair, Affine, AffinePow, Sum };

struct NatNode {
  Kind kind;
  u64 small = 0;        // Small
  Limbs limbs;          // Big
  NodePtr a, b;         // Pair/Sum children; Affine/AffinePow child in a
  u64 mul = 0, add = 0, count = 0;

  bool exact = false;   // value < 2^64 (then == small)
  double lg_lo = 0, lg_hi = 0;  // bounds on log2(value + 1)
  std::size_t hash = 0;

  mutable std::mutex mat_mutex;
  mutable std::shared_ptr<const Limbs> mat;

  NatNode() = default;
  // Chains built one node per evaluation step get very long; tearing them
  // down through the default recursive shared_ptr cascade blows the stack.
  ~NatNode() {
    std::vector<NodePtr> stack;
    auto take = [&stack](NodePtr& p) {
      if (p) stack.push_back(std::move(p));
      p.reset();
    };
    take(a);
    take(b);
    while (!stack.empty()) {
      NodePtr cur = std::move(stack.back());
      stack.pop_back();
      if (cur.use_count() == 1) {
        auto* raw = const_cast<NatNode*>(cur.get());
        take(raw->a);
        take(raw->b);
      }
    }
  }
};

static std::atomic<u64> g_budget_bits{u64(1) << 26};  // 64 Mbit default

static std::size_t hash_mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

static const NodePtr& zero_node() {
  static NodePtr z = [] {
    auto n = std::make_shared<NatNode>();
    n->kind = Kind::Small;
    n->small = 0;
    n->exact = true;
    n->lg_lo = n->lg_hi = 0.0;
    n->hash = hash_mix(1, 0);
    return n;
  }();
  return z;
}

static NodePtr make_small(u64 v) {
  if (v == 0) return zero_node();
  auto n = std::make_shared<NatNode>();
  n->kind = Kind::Small;
  n->small = v;
  n->exact = true;
  double lg = std::log2((double)v + 1.0);
  n->lg_lo = lg - 1e-6;
  n->lg_hi = lg + 1e-6;
  n->hash = hash_mix(1, v);
  return n;
}

static NodePtr make_big(Limbs limbs) {
  normalize(limbs);
  if (limbs.size() <= 1) return make_small(limbs.empty() ? 0 : limbs[0]);
  auto n = std::make_shared<NatNode>();
  n->kind = Kind::Big;
  double lg = (double)(bitlen_limbs(limbs) - 1);
  // value in [2^(bl-1), 2^bl): log2(value+1) in (bl-1, bl]
  n->lg_lo = lg - 1e-6;
  n->lg_hi = lg + 1.0 + 1e-6;
  std::size_t h = 2;
  for (u64 l : limbs) h = hash_mix(h, l);
  n->hash = h;
  n->limbs = std::move(limbs);
  n->mat = std::make_shared<const Limbs>(n->limbs);
  return n;
}

static bool is_materialized(const NodePtr& n) {
  return n->kind == Kind::Small || n->kind == Kind::Big;
}

static const Limbs& small_limbs_scratch(u64 v, Limbs& scratch) {
  scratch.clear();
  if (v) scratch.push_back(v);
  return scratch;
}

static std::shared_ptr<const Limbs> materialize(const NodePtr& n);

static Limbs materialize_copy(const NodePtr& n) { return *materialize(n); }

static std::shared_ptr<const Limbs> cached_mat(const NatNode* n) {
  std::lock_guard<std::mutex> g(n->mat_mutex);
  return n->mat;
}

static std::shared_ptr<const Limbs> mat_from_limbs(Limbs l) {
  return std::make_shared<const Limbs>(std::move(l));
}

// Bottom-up, iterative: deep sum chains would blow the stack recursively.
static std::shared_ptr<const Limbs> materialize(const NodePtr& n) {
  if (n->kind == Kind::Small) {
    Limbs l;
    if (n->small) l.push_back(n->small);
    return mat_from_limbs(std::move(l));
  }
  if (auto hit = cached_mat(n.get())) return hit;
  if (n->lg_hi > (double)g_budget_bits.load())
    throw ResourceError("number too large to materialize (" +
                        std::to_string((long long)n->lg_lo) + ".." +
                        std::to_string((long long)n->lg_hi) + " bits)");
  std::unordered_map<const NatNode*, std::shared_ptr<const Limbs>> memo;
  auto lookup = [&memo](const NatNode* c) -> const Limbs* {
    if (c->kind == Kind::Small) return nullptr;  // handled inline
    auto it = memo.find(c);
    return it == memo.end() ? nullptr : it->second.get();
  };
  auto child_limbs = [&](const NatNode* c, Limbs& scratch) -> const Limbs* {
    if (c->kind == Kind::Small) {
      scratch.clear();
      if (c->small) scratch.push_back(c->small);
      return &scratch;
    }
    return lookup(c);
  };
  std::vector<const NatNode*> stack{n.get()};
  while (!stack.empty()) {
    const NatNode* cur = stack.back();
    if (cur->kind == Kind::Small || memo.count(cur)) {
      stack.pop_back();
      continue;
    }
    if (auto hit = cached_mat(cur)) {
      memo.emplace(cur, std::move(hit));
      stack.pop_back();
      continue;
    }
    if (cur->kind == Kind::Big) {
      auto sp = mat_from_limbs(cur->limbs);
      {
        std::lock_guard<std::mutex> g(cur->mat_mutex);
        if (!cur->mat) cur->mat = sp;
      }
      memo.emplace(cur, std::move(sp));
      stack.pop_back();
      continue;
    }
    bool ready = true;
    auto need = [&](const NodePtr& ch) {
      if (ch && ch->kind != Kind::Small && !memo.count(ch.get())) {
        stack.push_back(ch.get());
        ready = false;
      }
    };
    need(cur->a);
    need(cur->b);
    if (!ready) continue;
    Limbs sa, sb;
    Limbs out;
    switch (cur->kind) {
      case Kind::Pair: {
        const Limbs* x = child_limbs(cur->a.get(), sa);
        const Limbs* y = child_limbs(cur->b.get(), sb);
        Limbs s = add_limbs(*x, *y);
        Limbs t = shr_limbs(mul_limbs(s, add_small_limbs(s, 1)), 1);
        out = add_limbs(t, *y);
        break;
      }
      case Kind::Affine: {
        const Limbs* x = child_limbs(cur->a.get(), sa);
        out = add_small_limbs(mul_small_limbs(*x, cur->mul), cur->add);
        break;
      }
      case Kind::AffinePow: {
        const Limbs* x = child_limbs(cur->a.get(), sa);
        if (cur->mul == 1) {
          Limbs inc = mul_small_limbs(Limbs{cur->count}, cur->add);
          out = add_limbs(*x, inc);
        } else {
          Limbs mk{1};
          u64 k = cur->count;
          Limbs base{cur->mul};
          while (k) {
            if (k & 1) mk = mul_limbs(mk, base);
            base = mul_limbs(base, base);
            k >>= 1;
          }
          Limbs geo =
              divmod_limbs(sub_limbs(mk, Limbs{1}), Limbs{cur->mul - 1}).first;
          out = add_limbs(mul_limbs(mk, *x), mul_small_limbs(geo, cur->add));
        }
        break;
      }
      case Kind::Sum: {
        const Limbs* x = child_limbs(cur->a.get(), sa);
        const Limbs* y = child_limbs(cur->b.get(), sb);
        out = add_limbs(*x, *y);
        break;
      }
      default:
        break;
    }
    auto sp = mat_from_limbs(std::move(out));
    {
      std::lock_guard<std::mutex> g(cur->mat_mutex);
      if (!cur->mat) cur->mat = sp;
    }
    memo.emplace(cur, std::move(sp));
    stack.pop_back();
  }
  return memo.at(n.get());
}

// --- smart constructors ----------------------------------------------------

static NodePtr make_pair_node(NodePtr x, NodePtr y);
static NodePtr make_affine(u64 m, u64 c, NodePtr x);
static NodePtr make_sum(NodePtr x, NodePtr y);

// Eagerly materialize pairs up to this size; beyond it, keep structure.
// Kept small: materialized pairs cost an isqrt to unpair, lazy ones are free.
static constexpr double kEagerPairBits = 512.0;

// Implicit materialization cap for structure-blind operations (unpair of a
// non-pair node, decoding a raw big value). Desk-scale codes fit well below
// this; anything above it is a runaway value, not a program index.
static constexpr double kStructuralBits = 262144.0;

static NodePtr make_pair_node(NodePtr x, NodePtr y) {
  if (x->exact && y->exact) {
    u128 s = (u128)x->small + y->small;
    if (s < ((u128)1 << 33)) {
      u128 v = s * (s + 1) / 2 + y->small;
      if (v >> 64) {
        Limbs l{(u64)v, (u64)(v >> 64)};
        return make_big(std::move(l));
      }
      return make_small((u64)v);
    }
  }
  if (is_materialized(x) && is_materialized(y) &&
      2.0 * std::max(x->lg_hi, y->lg_hi) + 4 < kEagerPairBits) {
    Limbs xl = materialize_copy(x);
    Limbs yl = materialize_copy(y);
    Limbs s = add_limbs(xl, yl);
    Limbs t = shr_limbs(mul_limbs(s, add_small_limbs(s, 1)), 1);
    return make_big(add_limbs(t, yl));
  }
  auto n = std::make_shared<NatNode>();
  n->kind = Kind::Pair;
  n->a = std::move(x);
  n->b = std::move(y);
  double slo = std::max(n->a->lg_lo, n->b->lg_lo);
  double shi = std::max(n->a->lg_hi, n->b->lg_hi) + 1.0;
  n->lg_lo = std::max(0.0, 2.0 * slo - 3.0);
  n->lg_hi = 2.0 * shi + 1.0;
  n->hash = hash_mix(hash_mix(3, n->a->hash), n->b->hash);
  return n;
}

static NodePtr make_affine(u64 m, u64 c, NodePtr x) {
  if (m == 0) return make_small(c);
  if (m == 1 && c == 0) return x;
  if (x->exact) {
    u128 v = (u128)m * x->small + c;
    if (!(v >> 64)) return make_small((u64)v);
    if (is_materialized(x)) {
      Limbs l{(u64)v, (u64)(v >> 64)};
      return make_big(std::move(l));
    }
  }
  if (x->kind == Kind::Big) {
    return make_big(add_small_limbs(mul_small_limbs(x->limbs, m), c));
  }
  if (x->kind == Kind::Affine) {
    // m*(m2*y + c2) + c = (m*m2)*y + (m*c2 + c), when coefficients fit
    u128 nm = (u128)m * x->mul;
    u128 nc = (u128)m * x->add + c;
    if (!(nm >> 63) && !(nc >> 63))
      return make_affine((u64)nm, (u64)nc, x->a);
  }
  auto n = std::make_shared<NatNode>();
  n->kind = Kind::Affine;
  n->mul = m;
  n->add = c;
  n->a = std::move(x);
  double lm = std::log2((double)m);
  n->lg_lo = std::max(0.0, n->a->lg_lo + lm - 1.0);
  n->lg_hi = std::max(n->a->lg_hi + lm, std::log2((double)c + 1.0)) + 1.0;
  n->hash = hash_mix(hash_mix(hash_mix(4, m), c), n->a->hash);
  return n;
}

static NodePtr make_affine_pow(u64 m, u64 c, u64 count, NodePtr x) {
  if (count == 0) return x;
  if (m == 0) throw std::invalid_argument("affine_pow with mul = 0");
  if (m == 1 && c == 0) return x;
  if (count == 1) return make_affine(m, c, x);
  if (x->exact) {
    if (m == 1) {
      u128 v = (u128)x->small + (u128)c * count;
      if (!(v >> 64)) return make_small((u64)v);
    } else if (x->small == 0 && c == 0) {
      return zero_node();
    } else {
      // With m >= 2 and a nonzero seed the value escapes u64 within ~66
      // steps, so this fold terminates quickly whatever `count` is.
      u128 v = x->small;
      u64 k = count;
      bool fits = true;
      while (k) {
        v = v * m + c;
        if (v >> 64) {
          fits = false;
          break;
        }
        --k;
      }
      if (fits) return make_small((u64)v);
    }
  }
  auto n = std::make_shared<NatNode>();
  n->kind = Kind::AffinePow;
  n->mul = m;
  n->add = c;
  n->count = count;
  n->a = std::move(x);
  double lm = std::log2((double)m);
  if (m == 1) {
    double incr = std::log2((double)c + 1.0) + std::log2((double)count + 1.0);
    n->lg_lo = std::max(n->a->lg_lo, incr - 2.0);
    n->lg_hi = std::max(n->a->lg_hi, incr) + 1.0;
  } else {
    double span = (double)count * lm;
    double basehi = std::max(n->a->lg_hi, std::log2((double)c + 1.0) + 1.0);
    n->lg_lo = std::max(0.0, span + n->a->lg_lo - 2.0 - lm);
    n->lg_hi = span + basehi + 2.0;
  }
  n->hash = hash_mix(hash_mix(hash_mix(hash_mix(5, m), c), count), n->a->hash);
  return n;
}

static NodePtr make_sum(NodePtr x, NodePtr y) {
  if (x->exact && x->small == 0) return y;
  if (y->exact && y->small == 0) return x;
  if (x->exact && y->exact) {
    u128 v = (u128)x->small + y->small;
    if (!(v >> 64)) return make_small((u64)v);
    Limbs l{(u64)v, (u64)(v >> 64)};
    return make_big(std::move(l));
  }
  if (is_materialized(x) && is_materialized(y)) {
    Limbs sx, sy;
    const Limbs& xl = x->kind == Kind::Big ? x->limbs : small_limbs_scratch(x->small, sx);
    const Limbs& yl = y->kind == Kind::Big ? y->limbs : small_limbs_scratch(y->small, sy);
    return make_big(add_limbs(xl, yl));
  }
  if (y->exact) return make_affine(1, y->small, std::move(x));
  if (x->exact) return make_affine(1, x->small, std::move(y));
  // merge affine siblings over a shared child: m1*z+c1 + m2*z+c2
  if (x->kind == Kind::Affine && y->kind == Kind::Affine && x->a == y->a) {
    u128 nm = (u128)x->mul + y->mul;
    u128 nc = (u128)x->add + y->add;
    if (!(nm >> 63) && !(nc >> 63))
      return make_affine((u64)nm, (u64)nc, x->a);
  }
  auto n = std::make_shared<NatNode>();
  n->kind = Kind::Sum;
  n->a = std::move(x);
  n->b = std::move(y);
  n->lg_lo = std::max(n->a->lg_lo, n->b->lg_lo);
  n->lg_hi = std::max(n->a->lg_hi, n->b->lg_hi) + 1.0;
  n->hash = hash_mix(hash_mix(6, n->a->hash), n->b->hash);
  return n;
}

// --- residues ---------------------------------------------------------------

// Exact value mod an odd m (3 <= m < 2^62). Odd moduli make the triangular
// term T(s) = s(s+1)/2 computable from s mod m alone via the inverse of 2,
// so one bottom-up pass over the DAG suffices at any depth.
static u64 mod_node(const NodePtr& root, u64 m) {
  if (m < 3 || (m & 1) == 0) throw std::invalid_argument("mod_node: odd m >= 3");
  const u64 inv2 = (m + 1) / 2;
  auto mulm = [m](u64 x, u64 y) { return (u64)((u128)x * y % m); };
  std::unordered_map<const NatNode*, u64> memo;
  std::vector<const NatNode*> stack{root.get()};
  while (!stack.empty()) {
    const NatNode* n = stack.back();
    if (memo.count(n)) {
      stack.pop_back();
      continue;
    }
    u64 r = 0;
    switch (n->kind) {
      case Kind::Small:
        r = n->small % m;
        break;
      case Kind::Big:
        r = mod_small_limbs(n->limbs, m);
        break;
      case Kind::Pair: {
        auto ia = memo.find(n->a.get()), ib = memo.find(n->b.get());
        if (ia == memo.end() || ib == memo.end()) {
          if (ia == memo.end()) stack.push_back(n->a.get());
          if (ib == memo.end()) stack.push_back(n->b.get());
          continue;
        }
        u64 sm = (ia->second + ib->second) % m;
        u64 tri = mulm(mulm(sm, (sm + 1) % m), inv2);
        r = (tri + ib->second) % m;
        break;
      }
      case Kind::Affine: {
        auto ia = memo.find(n->a.get());
        if (ia == memo.end()) {
          stack.push_back(n->a.get());
          continue;
        }
        r = (mulm(n->mul % m, ia->second) + n->add % m) % m;
        break;
      }
      case Kind::AffinePow: {
        auto ia = memo.find(n->a.get());
        if (ia == memo.end()) {
          stack.push_back(n->a.get());
          continue;
        }
        if (n->mul == 1) {
          u64 inc = mulm(n->add % m, n->count % m);
          r = (ia->second + inc) % m;
        } else {
          // m^k * x + add * (m^k - 1)/(mul - 1); the geometric factor is an
          // exact integer, recovered modulo m via the modulus m*(mul - 1).
          u128 mm128 = (u128)m * (n->mul - 1);
          if (mm128 >> 63) throw ResourceError("modulus too large for affine-pow");
          u64 mm = (u64)mm128;
          auto modpow = [](u64 base, u64 exp, u64 mod) {
            u64 acc = 1 % mod;
            base %= mod;
            while (exp) {
              if (exp & 1) acc = (u64)((u128)acc * base % mod);
              base = (u64)((u128)base * base % mod);
              exp >>= 1;
            }
            return acc;
          };
          u64 g = (modpow(n->mul, n->count, mm) + mm - 1 % mm) % mm;
          u64 geo = (g / (n->mul - 1)) % m;
          u64 mk = modpow(n->mul, n->count, m);
          r = (mulm(mk, ia->second) + mulm(n->add % m, geo)) % m;
        }
        break;
      }
      case Kind::Sum: {
        auto ia = memo.find(n->a.get()), ib = memo.find(n->b.get());
        if (ia == memo.end() || ib == memo.end()) {
          if (ia == memo.end()) stack.push_back(n->a.get());
          if (ib == memo.end()) stack.push_back(n->b.get());
          continue;
        }
        r = (ia->second + ib->second) % m;
        break;
      }
    }
    memo[n] = r;
    stack.pop_back();
  }
  return memo[root.get()];
}

// --- equality / comparison --------------------------------------------------

static bool intervals_disjoint(const NatNode* a, const NatNode* b) {
  return a->lg_hi < b->lg_lo || b->lg_hi < a->lg_lo;
}

static const u64 kProbes[] = {
    2305843009213693951ull, 2147483647ull, 1073741789ull, 1073741783ull,
    1000000007ull,          1000000009ull, 999999937ull,  998244353ull,
    754974721ull,           469762049ull,
};

// Bound for opportunistic materialize-and-compare during equality.
static constexpr double kEqMaterializeBits = 4.0 * 1024 * 1024;

struct EqCtx {
  std::unordered_map<u64, int> memo;  // (a,b) -> -1 unknown, 0 false, 1 true
  int depth = 0;
  static u64 key(const NatNode* a, const NatNode* b) {
    auto x = (u64)(std::uintptr_t)a, y = (u64)(std::uintptr_t)b;
    if (x > y) std::swap(x, y);
    return x * 0x9e3779b97f4a7c15ull ^ y;
  }
};

// Structural proof attempt: 1 = proven equal, 0 = proven unequal,
// -1 = structure alone cannot decide.
static int equals_structural(const NodePtr& a, const NodePtr& b, EqCtx& ctx) {
  if (a == b) return 1;
  if (a->exact && b->exact) return a->small == b->small ? 1 : 0;
  if (a->exact != b->exact) return 0;  // non-exact nodes are >= 2^64
  if (intervals_disjoint(a.get(), b.get())) return 0;
  if (is_materialized(a) && is_materialized(b))
    return cmp_limbs(*materialize(a), *materialize(b)) == 0 ? 1 : 0;
  u64 k = EqCtx::key(a.get(), b.get());
  auto it = ctx.memo.find(k);
  if (it != ctx.memo.end()) return it->second;
  if (ctx.depth > 15000) return -1;
  ++ctx.depth;
  int r = -1;
  if (a->kind == b->kind) {
    switch (a->kind) {
      case Kind::Pair: {
        // pairing is a bijection: equal iff both components equal
        int ra = equals_structural(a->a, b->a, ctx);
        int rb = ra == 0 ? 0 : equals_structural(a->b, b->b, ctx);
        r = (ra == 0 || rb == 0) ? 0 : (ra == 1 && rb == 1) ? 1 : -1;
        break;
      }
      case Kind::Affine:
        if (a->mul == b->mul && a->add == b->add)
          r = equals_structural(a->a, b->a, ctx);
        break;
      case Kind::AffinePow:
        if (a->mul == b->mul && a->add == b->add && a->count == b->count)
          r = equals_structural(a->a, b->a, ctx);
        break;
      case Kind::Sum: {
        // sums are not injective: only a positive match is conclusive
        int ra = equals_structural(a->a, b->a, ctx);
        int rb = ra == 1 ? equals_structural(a->b, b->b, ctx) : -1;
        r = (ra == 1 && rb == 1) ? 1 : -1;
        break;
      }
      default:
        break;
    }
  }
  --ctx.depth;
  ctx.memo.emplace(k, r);
  return r;
}

static bool equals_node(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->exact && b->exact) return a->small == b->small;
  if (a->exact != b->exact) return false;
  if (intervals_disjoint(a.get(), b.get())) return false;
  if (is_materialized(a) && is_materialized(b))
    return cmp_limbs(*materialize(a), *materialize(b)) == 0;
  // Residue probes refute quickly and run at any DAG depth.
  for (u64 p : kProbes)
    if (mod_node(a, p) != mod_node(b, p)) return false;
  // Probes agree; look for a structural proof of equality.
  EqCtx ctx;
  int r = equals_structural(a, b, ctx);
  if (r >= 0) return r == 1;
  double need = std::max(a->lg_hi, b->lg_hi);
  if (need <= kEqMaterializeBits && need <= (double)g_budget_bits.load())
    return cmp_limbs(*materialize(a), *materialize(b)) == 0;
  throw ResourceError("equality of huge structurally distinct numbers undecided");
}

static int compare_node(const NodePtr& a, const NodePtr& b) {
  if (a == b) return 0;
  if (a->exact && b->exact)
    return a->small < b->small ? -1 : a->small > b->small ? 1 : 0;
  if (a->exact && !b->exact) return -1;
  if (!a->exact && b->exact) return 1;
  if (a->lg_hi < b->lg_lo) return -1;
  if (b->lg_hi < a->lg_lo) return 1;
  double need = std::max(a->lg_hi, b->lg_hi);
  if (need <= (double)g_budget_bits.load())
    return cmp_limbs(*materialize(a), *materialize(b));
  if (equals_node(a, b)) return 0;
  throw ResourceError("comparison of huge numbers undecided");
}

// --- text -------------------------------------------------------------------

static void to_text_node(const NodePtr& n, std::string& out) {
  switch (n->kind) {
    case Kind::Small:
      out += std::to_string(n->small);
      break;
    case Kind::Big:
      out += to_decimal_limbs(n->limbs);
      break;
    case Kind::Pair:
      out += "p(";
      to_text_node(n->a, out);
      out += ',';
      to_text_node(n->b, out);
      out += ')';
      break;
    case Kind::Affine:
      out += "a(";
      out += std::to_string(n->mul);
      out += ',';
      out += std::to_string(n->add);
      out += ',';
      to_text_node(n->a, out);
      out += ')';
      break;
    case Kind::AffinePow:
      out += "w(";
      out += std::to_string(n->mul);
      out += ',';
      out += std::to_string(n->add);
      out += ',';
      out += std::to_string(n->count);
      out += ',';
      to_text_node(n->a, out);
      out += ')';
      break;
    case Kind::Sum:
      out += "s(";
      to_text_node(n->a, out);
      out += ',';
      to_text_node(n->b, out);
      out += ')';
      break;
  }
}

struct NatTextParser {
  std::string_view text;
  std::size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  u64 parse_u64() {
    std::size_t start = pos;
    u64 v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      u64 nv = v * 10 + (u64)(text[pos] - '0');
      if (nv / 10 != v) throw ParseError("number too large", start);
      v = nv;
      ++pos;
    }
    if (pos == start) throw ParseError("expected number", pos);
    return v;
  }
  NodePtr parse() {
    char c = peek();
    if (c >= '0' && c <= '9') {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      std::string_view digits = text.substr(start, pos - start);
      if (digits.size() > 1 && digits[0] == '0')
        throw ParseError("leading zero", start);
      Limbs l = from_decimal_limbs(digits, start);
      if (l.size() <= 1) return make_small(l.empty() ? 0 : l[0]);
      return make_big(std::move(l));
    }
    if (c == 'p') {
      ++pos;
      expect('(');
      NodePtr x = parse();
      expect(',');
      NodePtr y = parse();
      expect(')');
      return make_pair_node(std::move(x), std::move(y));
    }
    if (c == 'a') {
      ++pos;
      expect('(');
      u64 m = parse_u64();
      expect(',');
      u64 cc = parse_u64();
      expect(',');
      NodePtr x = parse();
      expect(')');
      return make_affine(m, cc, std::move(x));
    }
    if (c == 'w') {
      ++pos;
      expect('(');
      u64 m = parse_u64();
      expect(',');
      u64 cc = parse_u64();
      expect(',');
      u64 k = parse_u64();
      expect(',');
      NodePtr x = parse();
      expect(')');
      return make_affine_pow(m, cc, k, std::move(x));
    }
    if (c == 's') {
      ++pos;
      expect('(');
      NodePtr x = parse();
      expect(',');
      NodePtr y = parse();
      expect(')');
      return make_sum(std::move(x), std::move(y));
    }
    throw ParseError("expected numeral", pos);
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Nat public interface
// ---------------------------------------------------------------------------

using detail::Limbs;
using detail::NatNode;
using detail::NodePtr;
using detail::u128;
using detail::u64;

Nat::Nat() : node_(detail::zero_node()) {}
Nat::Nat(std::uint64_t v) : node_(detail::make_small(v)) {}

Nat Nat::from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty number", 0);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("expected digit", i);
  if (text.size() > 1 && text[0] == '0') throw ParseError("leading zero", 0);
  Limbs l = detail::from_decimal_limbs(text, 0);
  if (l.size() <= 1) return Nat(detail::make_small(l.empty() ? 0 : l[0]));
  return Nat(detail::make_big(std::move(l)));
}

Nat Nat::pow2(std::uint64_t exponent) {
  if (exponent < 64) return Nat(u64(1) << exponent);
  Limbs l(exponent / 64 + 1, 0);
  l.back() = u64(1) << (exponent % 64);
  return Nat(detail::make_big(std::move(l)));
}

bool Nat::is_zero() const { return node_->exact && node_->small == 0; }
bool Nat::fits_u64() const { return node_->exact; }
std::uint64_t Nat::as_u64() const {
  if (!node_->exact) throw std::logic_error("Nat::as_u64 on a large value");
  return node_->small;
}

std::uint64_t Nat::mod_u64(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("mod by zero");
  if (m == 1) return 0;
  if (node_->exact) return node_->small % m;
  if (detail::is_materialized(node_))
    return detail::mod_small_limbs(*detail::materialize(node_), m);
  // Structural residues ride on the triangular-number identity, which needs
  // an invertible 2; lazy values therefore support odd moduli only.
  if ((m & 1) == 0)
    throw std::invalid_argument("mod_u64 on a lazy value needs an odd modulus");
  return detail::mod_node(node_, m);
}

std::pair<double, double> Nat::log2_bounds() const {
  return {node_->lg_lo, node_->lg_hi};
}

Nat operator+(const Nat& a, const Nat& b) {
  return Nat(detail::make_sum(a.node(), b.node()));
}

Nat Nat::succ() const { return add_u64(1); }

Nat Nat::add_u64(std::uint64_t c) const {
  if (c == 0) return *this;
  return Nat(detail::make_sum(node_, detail::make_small(c)));
}

Nat Nat::mul_u64(std::uint64_t m) const {
  return Nat(detail::make_affine(m, 0, node_));
}

Nat Nat::pred() const {
  const NatNode* n = node_.get();
  switch (n->kind) {
    case detail::Kind::Small:
      return n->small ? Nat(n->small - 1) : Nat();
    case detail::Kind::Big: {
      Limbs l = detail::sub_limbs(n->limbs, Limbs{1});
      return Nat(detail::make_big(std::move(l)));
    }
    case detail::Kind::Affine: {
      if (n->add >= 1) return Nat(detail::make_affine(n->mul, n->add - 1, n->a));
      // m*x with x >= 1 (lazy child is >= 2^64): m*x - 1 = m*(x-1) + (m-1)
      Nat child(n->a);
      return Nat(detail::make_affine(n->mul, n->mul - 1, child.pred().node()));
    }
    case detail::Kind::Pair: {
      // pair(x, y) - 1 == pair(x+1, y-1) for y >= 1, pair(0, x-1) for y == 0.
      Nat x(n->a), y(n->b);
      if (!y.is_zero())
        return Nat(detail::make_pair_node(x.succ().node(), y.pred().node()));
      if (x.is_zero()) return Nat();
      return Nat(detail::make_pair_node(detail::zero_node(), x.pred().node()));
    }
    case detail::Kind::Sum: {
      Nat b(n->b);
      return Nat(detail::make_sum(n->a, b.pred().node()));
    }
    case detail::Kind::AffinePow: {
      Limbs l = detail::sub_limbs(detail::materialize_copy(node_), Limbs{1});
      return Nat(detail::make_big(std::move(l)));
    }
  }
  return Nat();
}

Nat Nat::sub(const Nat& a, const Nat& b) {
  int c = compare(a, b);
  if (c < 0) throw std::invalid_argument("Nat::sub would underflow");
  if (c == 0) return Nat();
  if (a.node()->exact) return Nat(a.node()->small - b.node()->small);
  if (b.node()->exact && b.node()->small <= 4096 && !detail::is_materialized(a.node())) {
    Nat r = a;
    for (u64 i = 0; i < b.node()->small; ++i) r = r.pred();
    return r;
  }
  Limbs l = detail::sub_limbs(detail::materialize_copy(a.node()),
                              detail::materialize_copy(b.node()));
  return Nat(detail::make_big(std::move(l)));
}

Nat Nat::monus(const Nat& a, const Nat& b) {
  int c = compare(a, b);
  if (c <= 0) return Nat();
  return sub(a, b);
}

Nat Nat::mul(const Nat& a, const Nat& b) {
  if (a.node()->exact) return b.mul_u64(a.node()->small);
  if (b.node()->exact) return a.mul_u64(b.node()->small);
  Limbs l = detail::mul_limbs(detail::materialize_copy(a.node()),
                              detail::materialize_copy(b.node()));
  return Nat(detail::make_big(std::move(l)));
}

Nat Nat::affine_pow(std::uint64_t m, std::uint64_t c, std::uint64_t count,
                    const Nat& base) {
  return Nat(detail::make_affine_pow(m, c, count, base.node()));
}

std::pair<Nat, std::uint64_t> Nat::divmod_u64(std::uint64_t d) const {
  if (d == 0) throw std::invalid_argument("division by zero");
  if (node_->exact) return {Nat(node_->small / d), node_->small % d};
  auto mat = detail::materialize(node_);
  auto [q, r] = detail::divmod_small_limbs(*mat, d);
  return {Nat(detail::make_big(std::move(q))), r};
}

Nat Nat::pair(const Nat& x, const Nat& y) {
  return Nat(detail::make_pair_node(x.node(), y.node()));
}

std::pair<Nat, Nat> Nat::unpair() const {
  const NatNode* n = node_.get();
  if (n->kind == detail::Kind::Pair) return {Nat(n->a), Nat(n->b)};
  if (n->kind == detail::Kind::Affine && n->mul == 1 && n->add <= 4096) {
    // pair(x, y) + 1 == pair(x - 1, y + 1), wrapping onto the next diagonal
    // when x hits zero; walk the small offset instead of materializing.
    auto [x, y] = Nat(n->a).unpair();
    for (std::uint64_t k = 0; k < n->add; ++k) {
      if (x.is_zero()) {
        x = y.succ();
        y = Nat();
      } else {
        x = x.pred();
        y = y.succ();
      }
    }
    return {x, y};
  }
  if (n->exact) {
    u64 v = n->small;
    // s = floor((sqrt(8v+1) - 1) / 2) without overflow: work in u128.
    u128 disc = (u128)8 * v + 1;
    u64 s = (u64)std::sqrt((double)disc);
    while ((u128)s * s > disc) --s;
    while ((u128)(s + 1) * (s + 1) <= disc) ++s;
    u64 diag = (s - 1) / 2;
    u128 t = (u128)diag * (diag + 1) / 2;
    u64 y = (u64)((u128)v - t);
    u64 x = diag - y;
    return {Nat(x), Nat(y)};
  }
  if (!detail::is_materialized(node_) && node_->lg_hi > detail::kStructuralBits)
    throw ResourceError("unpair of a huge unstructured value");
  auto mat = detail::materialize(node_);
  Limbs disc = detail::add_small_limbs(detail::mul_small_limbs(*mat, 8), 1);
  Limbs root = detail::isqrt_limbs(disc);
  Limbs s = detail::shr_limbs(detail::sub_limbs(root, Limbs{1}), 1);
  Limbs t = detail::shr_limbs(
      detail::mul_limbs(s, detail::add_small_limbs(s, 1)), 1);
  Limbs y = detail::sub_limbs(*mat, t);
  Limbs x = detail::sub_limbs(s, y);
  return {Nat(detail::make_big(std::move(x))), Nat(detail::make_big(std::move(y)))};
}

bool operator==(const Nat& a, const Nat& b) {
  return detail::equals_node(a.node(), b.node());
}

int Nat::compare(const Nat& a, const Nat& b) {
  return detail::compare_node(a.node(), b.node());
}

std::string Nat::to_decimal() const {
  if (node_->exact) return std::to_string(node_->small);
  return detail::to_decimal_limbs(*detail::materialize(node_));
}

std::string Nat::to_text() const {
  std::string out;
  detail::to_text_node(node_, out);
  return out;
}

Nat Nat::from_text(std::string_view text) {
  detail::NatTextParser p{text};
  NodePtr n = p.parse();
  if (p.pos != text.size()) throw ParseError("trailing characters", p.pos);
  return Nat(std::move(n));
}

std::optional<std::tuple<std::uint64_t, std::uint64_t, Nat>>
Nat::affine_parts() const {
  if (node_->kind != detail::Kind::Affine) return std::nullopt;
  return std::make_tuple(node_->mul, node_->add, Nat(node_->a));
}

std::size_t Nat::hash() const { return node_->hash; }

std::uint64_t Nat::bit_length_exact() const {
  if (node_->exact) {
    return node_->small ? 64 - std::countl_zero(node_->small) : 0;
  }
  return detail::bitlen_limbs(*detail::materialize(node_));
}

void Nat::set_materialize_budget_bits(std::uint64_t bits) {
  detail::g_budget_bits.store(bits);
}
std::uint64_t Nat::materialize_budget_bits() {
  return detail::g_budget_bits.load();
}

}  // namespace goedel
