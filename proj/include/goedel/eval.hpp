#pragma once

#include <vector>

#include "goedel/codec.hpp"

namespace goedel {

// Step budget for an evaluation. Every constructor entry and every Mu trial
// consumes one unit; exhaustion is a value, not an error.
struct Fuel {
  Nat steps;
  explicit Fuel(Nat s) : steps(std::move(s)) {}
  explicit Fuel(std::uint64_t s) : steps(s) {}
};

class EvalOutcome {
 public:
  static EvalOutcome make_halted(Nat value) {
    return EvalOutcome(true, std::move(value));
  }
  static EvalOutcome make_out_of_fuel(Nat consumed) {
    return EvalOutcome(false, std::move(consumed));
  }

  bool halted() const { return halted_; }
  const Nat& value() const {
    if (!halted_) throw std::logic_error("EvalOutcome: no value, out of fuel");
    return payload_;
  }
  const Nat& consumed() const {
    if (halted_) throw std::logic_error("EvalOutcome: halted, no fuel count");
    return payload_;
  }

  friend bool operator==(const EvalOutcome& a, const EvalOutcome& b) {
    return a.halted_ == b.halted_ && a.payload_ == b.payload_;
  }
  friend bool operator!=(const EvalOutcome& a, const EvalOutcome& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  EvalOutcome(bool h, Nat p) : halted_(h), payload_(std::move(p)) {}
  bool halted_;
  Nat payload_;
};

struct EvalOptions {
  // Closed-form execution of the registered arithmetic terms. Outcome- and
  // fuel-equivalent to the plain loop; switchable for differential tests.
  bool fast_paths = true;
};

EvalOutcome eval(const TermPtr& t, const Nat& x, const Fuel& fuel,
                 const EvalOptions& opts = {});
EvalOutcome eval_index(const CodeIndex& i, const Nat& x, const Fuel& fuel,
                       const EvalOptions& opts = {});

// The outputs phi_i(1), ..., phi_i(count), each on a fresh budget.
std::vector<EvalOutcome> run_enumerator(const CodeIndex& i,
                                        std::uint64_t count, const Fuel& fuel,
                                        const EvalOptions& opts = {});

}  // namespace goedel
