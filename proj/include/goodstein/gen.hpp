#pragma once

#include <cstdint>
#include <random>

#include "goodstein/hb_term.hpp"
#include "goodstein/ord_e0.hpp"

namespace gs {

// Seeded term generators for the sampled suites. Deterministic for a fixed
// seed and draw sequence.
class TermGen {
 public:
  explicit TermGen(uint64_t seed) : rng_(seed) {}

  uint64_t pick(uint64_t lo, uint64_t hi);  // inclusive

  // CNF ordinal with ncount bounded by budget and nesting by depth.
  OrdE0 e0(uint64_t budget, uint64_t depth);

  // OT term whose psi nodes are all in psi normal form.
  HBTerm hb_ot(uint64_t depth);
  // OT'-shaped term: Psi head plus w*b + l.
  HBTerm hb_otp(uint64_t depth);

 private:
  HBTerm psi_arg(uint64_t depth);
  std::mt19937_64 rng_;
};

}  // namespace gs
