#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

#include "goodstein/ack_term.hpp"
#include "goodstein/common.hpp"

namespace gs {

// Budgeted evaluator for A_alpha(k, b). Every recursive intermediate of a
// within-cap value is itself within cap, so aborting at the bit cap is sound:
// Exceeded means the exact value needs more than cap_bits bits. Results are
// memoized; duplicated concurrent computation is harmless, torn state is
// prevented by the table lock.
class AckEvaluator {
 public:
  explicit AckEvaluator(EvalCaps caps = EvalCaps{}) : caps_(caps) {}

  const EvalCaps& caps() const { return caps_; }
  void set_use_memo(bool on) { use_memo_ = on; }

  BudgetedNat ack(const OrdIx& alpha, uint32_t k, const BudgetedNat& b);
  BudgetedNat ack_u(uint64_t a, uint32_t k, const BudgetedNat& b);
  BudgetedNat ack_uu(uint64_t a, uint32_t k, uint64_t b);

  struct LimitIndex {
    bool exceeded = false;
    OrdIx index;
  };
  // The l-th iterated index lambda_{l,k,b}; pre: lambda is a limit.
  LimitIndex limit_index(const OrdIx& lambda, uint64_t l, uint32_t k,
                         const BudgetedNat& b);

 private:
  BudgetedNat eval(const OrdIx& alpha, uint32_t k, const BudgetedNat& b, int depth);
  BudgetedNat apply_iterated(const OrdIx& idx, uint32_t k, BudgetedNat cur,
                             int depth);

  EvalCaps caps_;
  bool use_memo_ = true;
  std::mutex mu_;
  // key: (index serialization, k, b); only indices >= 2 or limits are stored,
  // whose b is forced under cap_bits by the value >= 2^b growth bound
  std::map<std::tuple<std::string, uint32_t, uint64_t>, BudgetedNat> memo_;
};

// Spec-shaped wrappers around a caller-provided evaluator.
BudgetedNat ack_fin(uint64_t a, uint32_t k, const BudgetedNat& b, AckEvaluator& eng);
BudgetedNat ack_ord(const OrdE0& alpha, uint32_t k, const BudgetedNat& b,
                    AckEvaluator& eng);

struct LimitIndexE0 {
  enum Kind { Ok, Exceeded } kind;
  OrdE0 index;  // valid when Ok and all coefficients fit machine words
};
LimitIndexE0 limit_index_e0(const OrdE0& lambda, uint64_t l, uint32_t k,
                            const BudgetedNat& b, AckEvaluator& eng);

}  // namespace gs
