#include "goedel/eval.hpp"

#include <optional>

#include "goedel/machine_lib.hpp"

namespace goedel {

std::string EvalOutcome::to_string() const {
  if (halted_) return "halted(" + payload_.to_text() + ")";
  return "out-of-fuel(" + payload_.to_text() + ")";
}

namespace {

// Remaining fuel, split into a big reserve and a small spent-window so the
// common path never touches bignum arithmetic. Invariant: actual remaining
// = major - minor, with minor < 2^62.
class FuelMeter {
 public:
  explicit FuelMeter(Nat total) : initial_(total), major_(std::move(total)) {}

  bool charge(std::uint64_t c) {
    if (exhausted_) return false;
    if (major_.fits_u64()) {
      std::uint64_t avail = major_.as_u64() - minor_;
      if (c > avail) {
        exhausted_ = true;
        return false;
      }
      minor_ += c;
      return true;
    }
    minor_ += c;
    if (minor_ >= (std::uint64_t(1) << 62)) {
      major_ = Nat::sub(major_, Nat(minor_));
      minor_ = 0;
    }
    return true;
  }

  bool charge_big(const Nat& c) {
    if (exhausted_) return false;
    if (c.fits_u64()) return charge(c.as_u64());
    Nat needed = c.add_u64(minor_);
    if (Nat::compare(major_, needed) < 0) {
      exhausted_ = true;
      return false;
    }
    major_ = Nat::sub(major_, needed);
    minor_ = 0;
    return true;
  }

  bool exhausted() const { return exhausted_; }
  const Nat& initial() const { return initial_; }

 private:
  Nat initial_;
  Nat major_;
  std::uint64_t minor_ = 0;
  bool exhausted_ = false;
};

struct Machine {
  FuelMeter meter;
  bool fast;
  int depth = 0;

  Machine(Nat fuel, bool fast_paths)
      : meter(std::move(fuel)), fast(fast_paths) {}

  // nullopt means the budget ran dry (meter.exhausted() is then set).
  std::optional<Nat> run(TermPtr t, Nat x);

  std::optional<Nat> run_rec_fast(const TermPtr& t, const Nat& x);
};

struct DepthGuard {
  int& d;
  explicit DepthGuard(int& depth) : d(depth) {
    if (++d > 20000) throw ResourceError("evaluation recursion too deep");
  }
  ~DepthGuard() { --d; }
};

// Closed forms for the registered Rec shapes, fuel-exact by construction;
// test_eval pins them against the plain loop.
std::optional<Nat> Machine::run_rec_fast(const TermPtr& t, const Nat& x) {
  auto [n, a] = x.unpair();
  if (t == mlib::add_term()) {
    Nat cost = n.mul_u64(5).add_u64(2);
    if (!meter.charge_big(cost)) return std::nullopt;
    return n + a;
  }
  if (t == mlib::monus_term()) {
    Nat cost = n.mul_u64(5).add_u64(2);
    if (!meter.charge_big(cost)) return std::nullopt;
    return Nat::monus(a, n);
  }
  // mul: 2 + n*(10 + 5a)
  Nat per_iter = a.mul_u64(5).add_u64(10);
  Nat cost = Nat::mul(n, per_iter).add_u64(2);
  if (!meter.charge_big(cost)) return std::nullopt;
  return Nat::mul(n, a);
}

std::optional<Nat> Machine::run(TermPtr t, Nat x) {
  DepthGuard guard(depth);
  while (true) {
    switch (t->kind()) {
      case TermKind::Zero:
        if (!meter.charge(1)) return std::nullopt;
        return Nat(0);
      case TermKind::Succ:
        if (!meter.charge(1)) return std::nullopt;
        return x.succ();
      case TermKind::Pred:
        if (!meter.charge(1)) return std::nullopt;
        return x.pred();
      case TermKind::Id:
        if (!meter.charge(1)) return std::nullopt;
        return x;
      case TermKind::Proj1:
        if (!meter.charge(1)) return std::nullopt;
        return x.unpair().first;
      case TermKind::Proj2:
        if (!meter.charge(1)) return std::nullopt;
        return x.unpair().second;
      case TermKind::Const:
        if (!meter.charge(1)) return std::nullopt;
        return t->value();
      case TermKind::Pair: {
        if (!meter.charge(1)) return std::nullopt;
        auto f = run(t->child0(), x);
        if (!f) return std::nullopt;
        auto g = run(t->child1(), x);
        if (!g) return std::nullopt;
        return Nat::pair(*f, *g);
      }
      case TermKind::Comp: {
        if (!meter.charge(1)) return std::nullopt;
        auto gx = run(t->child1(), x);
        if (!gx) return std::nullopt;
        x = std::move(*gx);
        t = t->child0();
        continue;  // tail position
      }
      case TermKind::IfZ: {
        if (!meter.charge(1)) return std::nullopt;
        auto c = run(t->child0(), x);
        if (!c) return std::nullopt;
        t = c->is_zero() ? t->child1() : t->child2();
        continue;  // tail position
      }
      case TermKind::Mu: {
        if (!meter.charge(1)) return std::nullopt;
        for (std::uint64_t y = 0;; ++y) {
          if (!meter.charge(1)) return std::nullopt;  // trial
          auto b = run(t->child0(), Nat::pair(Nat(y), x));
          if (!b) return std::nullopt;
          if (b->is_zero()) return Nat(y);
        }
      }
      case TermKind::Univ: {
        if (!meter.charge(1)) return std::nullopt;
        auto [e, a] = x.unpair();
        t = decode(e);
        x = std::move(a);
        continue;  // tail position
      }
      case TermKind::Rec: {
        if (fast && (t == mlib::add_term() || t == mlib::monus_term() ||
                     t == mlib::mul_term())) {
          return run_rec_fast(t, x);
        }
        if (!meter.charge(1)) return std::nullopt;
        auto [n, a] = x.unpair();
        auto r = run(t->child0(), a);
        if (!r) return std::nullopt;
        // When n exceeds u64 the loop cannot finish; every step charges at
        // least one unit, so it ends in exhaustion once the budget is spent.
        bool small_bound = n.fits_u64();
        std::uint64_t bound = small_bound ? n.as_u64() : 0;
        for (std::uint64_t k = 0; !small_bound || k < bound; ++k) {
          auto nr = run(t->child1(), Nat::pair(Nat(k), Nat::pair(*r, a)));
          if (!nr) return std::nullopt;
          r = std::move(nr);
          if (!small_bound && k == (std::uint64_t)-1)
            throw ResourceError("rec loop count exceeds host limits");
        }
        return r;
      }
    }
  }
}

}  // namespace

EvalOutcome eval(const TermPtr& t, const Nat& x, const Fuel& fuel,
                 const EvalOptions& opts) {
  Machine m(fuel.steps, opts.fast_paths);
  auto r = m.run(t, x);
  if (!r) return EvalOutcome::make_out_of_fuel(m.meter.initial());
  return EvalOutcome::make_halted(std::move(*r));
}

EvalOutcome eval_index(const CodeIndex& i, const Nat& x, const Fuel& fuel,
                       const EvalOptions& opts) {
  return eval(decode(i), x, fuel, opts);
}

std::vector<EvalOutcome> run_enumerator(const CodeIndex& i,
                                        std::uint64_t count, const Fuel& fuel,
                                        const EvalOptions& opts) {
  if (count < 1) throw std::invalid_argument("run_enumerator: count >= 1");
  TermPtr t = decode(i);
  std::vector<EvalOutcome> out;
  out.reserve(count);
  for (std::uint64_t pos = 1; pos <= count; ++pos)
    out.push_back(eval(t, Nat(pos), fuel, opts));
  return out;
}

}  // namespace goedel
