#include "goodstein/ackermann.hpp"

namespace gs {

namespace {
constexpr int kMaxDepth = 4096;
constexpr uint64_t kMemoStride = 32;  // keep every 32nd b-column entry
}  // namespace

BudgetedNat AckEvaluator::ack(const OrdIx& alpha, uint32_t k, const BudgetedNat& b) {
  if (k < 1) throw precondition_error("ack requires k >= 1");
  if (caps_.cap_bits > (1ull << 32))
    throw precondition_error("cap_bits above 2^32 is not supported");
  return eval(alpha, k, b, 0);
}

BudgetedNat AckEvaluator::ack_u(uint64_t a, uint32_t k, const BudgetedNat& b) {
  return ack(ix_fin(BudgetedNat::of(BigNat(a), caps_.cap_bits)), k, b);
}

BudgetedNat AckEvaluator::ack_uu(uint64_t a, uint32_t k, uint64_t b) {
  return ack_u(a, k, BudgetedNat::of(BigNat(b), caps_.cap_bits));
}

BudgetedNat AckEvaluator::apply_iterated(const OrdIx& idx, uint32_t k,
                                         BudgetedNat cur, int depth) {
  for (uint32_t i = 0; i < k; ++i) {
    if (cur.is_exceeded()) return cur;
    cur = eval(idx, k, cur, depth + 1);
  }
  return cur;
}

BudgetedNat AckEvaluator::eval(const OrdIx& alpha, uint32_t k, const BudgetedNat& b,
                               int depth) {
  if (depth > kMaxDepth) throw internal_error("ack evaluation recursion too deep");
  const uint64_t cap = caps_.cap_bits;
  if (b.is_exceeded()) return BudgetedNat::exceeded(cap);

  if (alpha.is_zero() || k == 1) return bn_add_u(b, 1);  // A_a(1,b) = b+1 for all a

  if (alpha.is_finite()) {
    BudgetedNat a = alpha.finite_value();
    if (a.is_exact() && a.value() == 1) {
      // closed form A_1(k,b) = k*(1+b)
      return bn_mul(BudgetedNat::of(BigNat(k), cap), bn_add_u(b, 1));
    }
  }

  // Size gates. A term with trailing natural part n satisfies
  // A_{gamma+n}(k,b) >= A_n(k,b), and A_4(k,0) >= 2^(2^39) for k >= 3 while
  // A_n(2,0) >= 2^(n-3); with cap_bits <= 2^32 both force Exceeded.
  if (alpha.is_successor()) {
    const BudgetedNat& tc = alpha.terms.back().coeff.value;
    bool huge = tc.is_exceeded() || !tc.fits_u64();
    uint64_t n = huge ? UINT64_MAX : tc.as_u64();
    if (k >= 3 && n >= 4) return BudgetedNat::exceeded(cap);
    if (k == 2 && (huge || BigNat(n) > BigNat(cap) + 3))
      return BudgetedNat::exceeded(cap);
  }

  // From here the index is >= 2 or a limit, so A_alpha(k,b) >= 2^b.
  if (b.value() > BigNat(cap)) return BudgetedNat::exceeded(cap);
  uint64_t bu = b.value().convert_to<uint64_t>();
  std::string ser = ser_ordix(alpha);

  auto lookup = [&](uint64_t bq) -> std::optional<BudgetedNat> {
    if (!use_memo_) return std::nullopt;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({ser, k, bq});
    if (it == memo_.end()) return std::nullopt;
    if (it->second.is_exact() || it->second.cap_bits() >= cap) return it->second;
    return std::nullopt;
  };
  auto store = [&](uint64_t bq, const BudgetedNat& v) {
    if (!use_memo_) return;
    std::lock_guard<std::mutex> lock(mu_);
    memo_.insert({{ser, k, bq}, v});
  };

  if (auto hit = lookup(bu)) return *hit;

  // find a memoized column entry to restart from
  uint64_t start_b = 0;
  BudgetedNat cur;
  bool have_prev = false;  // cur holds A_alpha(k, start_b - 1)
  for (uint64_t back = 0; back <= std::min(bu, kMemoStride); ++back) {
    uint64_t bq = bu - back;
    if (bq == 0) break;
    if (auto hit = lookup(bq - 1)) {
      start_b = bq;
      cur = *hit;
      have_prev = true;
      break;
    }
  }

  bool successor = alpha.is_successor();
  OrdIx pred = successor ? ix_pred(alpha) : OrdIx{};

  for (uint64_t j = start_b; j <= bu; ++j) {
    BudgetedNat prev = have_prev ? cur : BudgetedNat::of(BigNat(0), cap);
    if (prev.is_exceeded()) {
      cur = prev;
      break;
    }
    if (successor) {
      cur = apply_iterated(pred, k, j == 0 ? BudgetedNat::of(BigNat(0), cap) : prev,
                           depth);
    } else {
      LimitIndex li = limit_index(alpha, k, k, prev);
      cur = li.exceeded
                ? BudgetedNat::exceeded(cap)
                : apply_iterated(li.index, k,
                                 j == 0 ? BudgetedNat::of(BigNat(0), cap) : prev,
                                 depth);
    }
    have_prev = true;
    if (cur.is_exceeded()) break;
    if (j % kMemoStride == 0) store(j, cur);
  }
  store(bu, cur);
  return cur;
}

AckEvaluator::LimitIndex AckEvaluator::limit_index(const OrdIx& lambda, uint64_t l,
                                                   uint32_t k, const BudgetedNat& b) {
  if (!lambda.is_limit()) throw precondition_error("limit_index requires a limit");
  if (b.is_exceeded()) return LimitIndex{true, {}};
  OrdIx cur = fund_ordix(lambda, b);  // lambda_{0,k,b} = lambda[b]
  for (uint64_t j = 0; j < l; ++j) {
    BudgetedNat v = eval(cur, k, b, 0);
    if (v.is_exceeded()) return LimitIndex{true, {}};
    cur = fund_ordix(lambda, v);
  }
  return LimitIndex{false, cur};
}

BudgetedNat ack_fin(uint64_t a, uint32_t k, const BudgetedNat& b, AckEvaluator& eng) {
  return eng.ack_u(a, k, b);
}

BudgetedNat ack_ord(const OrdE0& alpha, uint32_t k, const BudgetedNat& b,
                    AckEvaluator& eng) {
  if (k < 3) throw precondition_error("ack_ord requires k >= 3");
  return eng.ack(ordix_from_e0(alpha, eng.caps().cap_bits), k, b);
}

LimitIndexE0 limit_index_e0(const OrdE0& lambda, uint64_t l, uint32_t k,
                            const BudgetedNat& b, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("limit_index requires k >= 3");
  auto li = eng.limit_index(ordix_from_e0(lambda, eng.caps().cap_bits), l, k, b);
  if (li.exceeded) return LimitIndexE0{LimitIndexE0::Exceeded, {}};
  for (const IxTerm& t : li.index.terms)
    if (!t.coeff.value.fits_u64()) return LimitIndexE0{LimitIndexE0::Exceeded, {}};
  return LimitIndexE0{LimitIndexE0::Ok, ordix_to_e0(li.index)};
}

}  // namespace gs
