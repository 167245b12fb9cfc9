#include "doctest.h"

#include "goodstein/base_change.hpp"

using namespace gs;

namespace {
BudgetedNat bn(uint64_t v) { return BudgetedNat::of(BigNat(v), 65536); }
uint64_t u(const BudgetedNat& v) { return v.value().convert_to<uint64_t>(); }

// independent value-level base change by direct re-decomposition
uint64_t brute_bc(uint64_t m, uint32_t k, BCOp op, AckEvaluator& eng) {
  if (m == 0) return 0;
  AckNF nf = knf_fin(bn(m), k, eng);
  uint64_t a = nf.index.is_zero() ? 0 : u(nf.index.finite_value());
  uint64_t b = u(nf.b), l = u(nf.l);
  uint64_t a2 = op == BCOp::Prime || op == BCOp::First ? brute_bc(a, k, op, eng) : a;
  uint64_t b2 = op == BCOp::Prime || op == BCOp::Second ? brute_bc(b, k, op, eng) : b;
  return u(eng.ack_uu(a2, k + 1, b2)) + l;
}

uint64_t val_bc(uint64_t m, uint32_t k, BCOp op, AckEvaluator& eng) {
  AckTerm t = m == 0 ? ack_zero() : hereditary(bn(m), k, 1, eng);
  return u(eval_term(bc(t, k, op, eng), k + 1, eng));
}
}  // namespace

TEST_CASE("bc_prime values at k=3") {
  AckEvaluator eng;
  CHECK(val_bc(3, 3, BCOp::Prime, eng) == 4);
  CHECK(val_bc(2, 3, BCOp::Prime, eng) == 2);
  CHECK(val_bc(39, 3, BCOp::Prime, eng) == 340);
}

TEST_CASE("bc_second values at k=3") {
  AckEvaluator eng;
  CHECK(val_bc(0, 3, BCOp::Second, eng) == 0);
  CHECK(val_bc(7, 3, BCOp::Second, eng) == 9);
  CHECK(val_bc(12, 3, BCOp::Second, eng) == 20);
}

TEST_CASE("bc_first values at k=3") {
  AckEvaluator eng;
  CHECK(val_bc(12, 3, BCOp::First, eng) == 16);
  CHECK(val_bc(39, 3, BCOp::First, eng) == 340);
  CHECK(val_bc(7, 3, BCOp::First, eng) == 9);
}

TEST_CASE("bc_iter values at k=3") {
  AckEvaluator eng;
  CHECK(val_bc(3, 3, BCOp::Iter, eng) == 4);
  CHECK(val_bc(12, 3, BCOp::Iter, eng) == 16);
  CHECK(val_bc(2, 3, BCOp::Iter, eng) == 2);
}

TEST_CASE("structural base change matches the value-level oracle") {
  AckEvaluator eng;
  for (uint32_t k = 3; k <= 4; ++k)
    for (uint64_t m = 0; m <= 250; ++m)
      for (BCOp op : {BCOp::Prime, BCOp::Second, BCOp::First})
        CHECK(val_bc(m, k, op, eng) == brute_bc(m, k, op, eng));
}

TEST_CASE("bc_ord on CNF indices") {
  AckEvaluator eng;
  OrdIx w = ordix_from_e0(e0_omega(), 65536);
  OrdIx w3 = ordix_from_e0(parse_e0("w*3"), 65536);
  OrdIx ww2 = ordix_from_e0(parse_e0("w^(w)*2"), 65536);
  CHECK(cmp_ordix(bc_ord(w, 3, BCOp::Prime, eng), w) == Cmp::EQ);
  CHECK(cmp_ordix(bc_ord(w3, 3, BCOp::Prime, eng),
                  ordix_from_e0(parse_e0("w*4"), 65536)) == Cmp::EQ);
  CHECK(cmp_ordix(bc_ord(ww2, 3, BCOp::Prime, eng), ww2) == Cmp::EQ);
  CHECK(cmp_ordix(bc_ord(w3, 3, BCOp::First, eng),
                  ordix_from_e0(parse_e0("w*4"), 65536)) == Cmp::EQ);
}

TEST_CASE("monotonicity sweep (Lemma 4 shape)") {
  AckEvaluator eng;
  for (uint32_t k = 3; k <= 5; ++k) {
    uint64_t prev[3] = {0, 0, 0};
    for (uint64_t m = 1; m <= 200; ++m) {
      int i = 0;
      for (BCOp op : {BCOp::Prime, BCOp::Second, BCOp::First}) {
        uint64_t img = val_bc(m, k, op, eng);
        CHECK(m <= img);
        if (m >= k) CHECK(m < img);
        CHECK(prev[i] < img);  // (m-1) image below m image
        prev[i] = img;
        ++i;
      }
      uint64_t it = val_bc(m, k, BCOp::Iter, eng);
      if (m >= k) CHECK(m < it);
    }
  }
}
