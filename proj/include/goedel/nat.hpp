#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace goedel {

// Thrown when an operation would need to materialize a number whose size
// exceeds the configured budget (see Nat::set_materialize_budget_bits).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by the text parsers; carries the byte offset of the failure.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

namespace detail {
struct NatNode;
using NodePtr = std::shared_ptr<const NatNode>;
}  // namespace detail

// Arbitrary-precision natural number.
//
// Values below 2^64 are stored directly. Larger values are either
// materialized limb vectors or lazy structure nodes that record how the
// value was built: Cantor pairs, affine images m*x+c, iterated affine
// images, and sums. The lazy forms matter because the program codec
// multiplies bit lengths at every nesting level; indices produced by the
// creative loop stop fitting in memory after a few steps, while their
// structure stays tiny. All observable operations (equality, zero test,
// residues, decoding) are exact on both representations.
class Nat {
 public:
  Nat();                       // zero
  Nat(std::uint64_t v);        // NOLINT: implicit by design, mirrors literals
  static Nat from_decimal(std::string_view text);
  static Nat pow2(std::uint64_t exponent);

  // --- basic queries -------------------------------------------------------
  bool is_zero() const;
  bool fits_u64() const;
  std::uint64_t as_u64() const;  // precondition: fits_u64()
  // Exact residue modulo m (m >= 1, m < 2^61). Never materializes.
  std::uint64_t mod_u64(std::uint64_t m) const;
  // [lo, hi] bounds on log2(value + 1). Exact enough to separate values
  // whose sizes differ by a few bits; never materializes.
  std::pair<double, double> log2_bounds() const;

  // --- arithmetic ----------------------------------------------------------
  friend Nat operator+(const Nat& a, const Nat& b);
  Nat succ() const;
  Nat pred() const;  // monus: pred(0) == 0
  Nat mul_u64(std::uint64_t m) const;
  Nat add_u64(std::uint64_t c) const;
  // a - b; requires a >= b (throws std::invalid_argument otherwise).
  static Nat sub(const Nat& a, const Nat& b);
  // max(a - b, 0), the spec's monus.
  static Nat monus(const Nat& a, const Nat& b);
  static Nat mul(const Nat& a, const Nat& b);
  // Applies x -> m*x + c to `base`, `count` times (exact closed form).
  static Nat affine_pow(std::uint64_t m, std::uint64_t c, std::uint64_t count,
                        const Nat& base);
  // Quotient and remainder by a small divisor; materializes the value.
  std::pair<Nat, std::uint64_t> divmod_u64(std::uint64_t d) const;

  // --- Cantor pairing ------------------------------------------------------
  // pair(x, y) = (x+y)(x+y+1)/2 + y, a bijection N x N -> N.
  static Nat pair(const Nat& x, const Nat& y);
  // Inverse of pair; total.
  std::pair<Nat, Nat> unpair() const;

  // --- comparisons ---------------------------------------------------------
  // Exact value equality across all representations.
  friend bool operator==(const Nat& a, const Nat& b);
  friend bool operator!=(const Nat& a, const Nat& b) { return !(a == b); }
  // -1, 0, +1. May need to materialize both sides.
  static int compare(const Nat& a, const Nat& b);

  // --- text ----------------------------------------------------------------
  // Decimal expansion; materializes (throws ResourceError over budget).
  std::string to_decimal() const;
  // Canonical serialization: decimal for materialized values, an expression
  // form for lazy nodes:  p(x,y) | a(m,c,x) | w(m,c,k,x) | s(x,y).
  // Deterministic: equal construction yields byte-identical text.
  std::string to_text() const;
  static Nat from_text(std::string_view text);

  // If this value is held as a lazy affine image m*x + c, returns (m, c, x).
  std::optional<std::tuple<std::uint64_t, std::uint64_t, Nat>> affine_parts()
      const;

  // Structural hash, stable within a process run.
  std::size_t hash() const;

  // Raw bit length for materialized values only (testing / diagnostics).
  std::uint64_t bit_length_exact() const;

  // Process-wide cap on materialization, in bits.
  static void set_materialize_budget_bits(std::uint64_t bits);
  static std::uint64_t materialize_budget_bits();

  const detail::NodePtr& node() const { return node_; }
  explicit Nat(detail::NodePtr n) : node_(std::move(n)) {}

 private:
  detail::NodePtr node_;
};

// The spec's NatPair record.
struct NatPair {
  Nat left;
  Nat right;
};

}  // namespace goedel
