#include "doctest.h"

#include "goodstein/ackermann.hpp"
#include "goodstein/normal_form.hpp"

using namespace gs;

namespace {
uint64_t u(const BudgetedNat& v) { return v.value().convert_to<uint64_t>(); }
}  // namespace

TEST_CASE("ack_fin base cases") {
  AckEvaluator eng;
  CHECK(u(eng.ack_uu(0, 3, 7)) == 8);
  CHECK(u(eng.ack_uu(1, 3, 2)) == 9);  // A_1(k,b) = k(1+b)
  CHECK(u(eng.ack_uu(2, 3, 0)) == 39);
  CHECK(u(eng.ack_uu(2, 3, 1)) == 1092);
  CHECK(u(eng.ack_uu(2, 4, 0)) == 340);
  CHECK(eng.ack_uu(3, 3, 0).is_exceeded());  // beyond 10^(10^57)
}

TEST_CASE("direct recursion oracle agrees on small values") {
  // independent brute-force evaluation of the recursion, no closed forms
  std::function<uint64_t(uint64_t, uint32_t, uint64_t)> brute =
      [&](uint64_t a, uint32_t k, uint64_t b) -> uint64_t {
    if (a == 0) return b + 1;
    uint64_t cur = b == 0 ? 0 : brute(a, k, b - 1);
    for (uint32_t i = 0; i < k; ++i) cur = brute(a - 1, k, cur);
    return cur;
  };
  AckEvaluator eng;
  for (uint64_t a = 0; a <= 2; ++a)
    for (uint32_t k = 1; k <= 4; ++k)
      for (uint64_t b = 0; b <= (a == 2 ? 1u : 5u); ++b)
        CHECK(u(eng.ack_uu(a, k, b)) == brute(a, k, b));
}

TEST_CASE("ack_ord") {
  AckEvaluator eng;
  CHECK(u(ack_ord(e0_nat(2), 3, BudgetedNat::of(BigNat(0), 65536), eng)) == 39);
  CHECK(u(eng.ack_u(0, 5, BudgetedNat::of(BigNat(9), 65536))) == 10);
  CHECK(ack_ord(e0_omega(), 3, BudgetedNat::of(BigNat(0), 65536), eng)
            .is_exceeded());
}

TEST_CASE("limit_index") {
  AckEvaluator eng;
  BudgetedNat zero = BudgetedNat::of(BigNat(0), 65536);
  auto r0 = limit_index_e0(e0_omega(), 0, 3, zero, eng);
  REQUIRE(r0.kind == LimitIndexE0::Ok);
  CHECK(r0.index == e0_zero());
  auto r1 = limit_index_e0(e0_omega(), 1, 3, zero, eng);
  REQUIRE(r1.kind == LimitIndexE0::Ok);
  CHECK(r1.index == e0_nat(1));
  auto r2 = limit_index_e0(e0_omega(), 2, 3, zero, eng);
  REQUIRE(r2.kind == LimitIndexE0::Ok);
  CHECK(r2.index == e0_nat(3));
  CHECK(limit_index_e0(e0_omega(), 3, 3, zero, eng).kind ==
        LimitIndexE0::Exceeded);
}

TEST_CASE("strict monotonicity and bounds on evaluable samples") {
  AckEvaluator eng;
  for (const OrdE0& alpha : enumerate_ncount_le(3)) {
    OrdIx ix = ordix_from_e0(alpha, 65536);
    for (uint64_t b = 0; b <= 2; ++b) {
      BudgetedNat v = eng.ack(ix, 3, BudgetedNat::of(BigNat(b), 65536));
      BudgetedNat v1 = eng.ack(ix, 3, BudgetedNat::of(BigNat(b + 1), 65536));
      auto c = bn_cmp(v, v1);
      if (c) CHECK(*c == Cmp::LT);
      if (v.is_exact()) {
        CHECK(BigNat(mc_e0(alpha)) < v.value());
        CHECK(v.value() >= BigNat(ncount(alpha)) + b);
        if (!alpha.is_zero()) CHECK(v.value() > 2 * b);
      }
    }
  }
}

TEST_CASE("memoized and raw evaluation agree") {
  AckEvaluator memo;
  AckEvaluator raw;
  raw.set_use_memo(false);
  for (uint64_t a = 0; a <= 3; ++a) {
    for (uint64_t b = 0; b <= 3; ++b) {
      BudgetedNat x = memo.ack_uu(a, 4, b);
      BudgetedNat y = raw.ack_uu(a, 4, b);
      CHECK(x.is_exceeded() == y.is_exceeded());
      if (x.is_exact()) CHECK(x.value() == y.value());
    }
  }
}

TEST_CASE("k = 1 and k = 2 are accepted by evaluation") {
  AckEvaluator eng;
  CHECK(u(eng.ack_uu(5, 1, 7)) == 8);  // everything collapses to successor
  CHECK(u(eng.ack_uu(2, 2, 0)) == 6);
  CHECK(u(eng.ack_uu(3, 2, 0)) == 32766);
}
