#include "doctest.h"

#include "goodstein/normal_form.hpp"

using namespace gs;

namespace {
BudgetedNat bn(uint64_t v) { return BudgetedNat::of(BigNat(v), 65536); }
uint64_t u(const BudgetedNat& v) { return v.value().convert_to<uint64_t>(); }

// independent double-scan oracle: smallest-index largest-b decomposition
struct Flat {
  uint64_t a, b, l;
};
Flat brute_nf(uint64_t m, uint32_t k, AckEvaluator& eng) {
  uint64_t a = 0;
  while (true) {
    BudgetedNat nxt = eng.ack_uu(a + 1, k, 0);
    if (!nxt.is_exact() || u(nxt) > m) break;
    ++a;
  }
  uint64_t b = 0;
  while (true) {
    BudgetedNat nxt = eng.ack_uu(a, k, b + 1);
    if (!nxt.is_exact() || u(nxt) > m) break;
    ++b;
  }
  return Flat{a, b, m - u(eng.ack_uu(a, k, b))};
}
}  // namespace

TEST_CASE("knf_fin examples") {
  AckEvaluator eng;
  AckNF n3 = knf_fin(bn(3), 3, eng);
  CHECK(u(n3.index.finite_value()) == 1);
  CHECK(n3.b.is_zero());
  CHECK(n3.l.is_zero());

  AckNF n2 = knf_fin(bn(2), 3, eng);
  CHECK(n2.index.is_zero());
  CHECK(u(n2.b) == 1);
  CHECK(n2.l.is_zero());

  AckNF n100 = knf_fin(bn(100), 3, eng);
  CHECK(u(n100.index.finite_value()) == 2);
  CHECK(n100.b.is_zero());
  CHECK(u(n100.l) == 61);

  CHECK_THROWS_AS(knf_fin(bn(0), 3, eng), precondition_error);
  CHECK_THROWS_AS(knf_fin(bn(5), 2, eng), precondition_error);
}

TEST_CASE("knf against the double-scan oracle") {
  AckEvaluator eng;
  for (uint32_t k = 3; k <= 4; ++k) {
    for (uint64_t m = 1; m <= 400; ++m) {
      Flat f = brute_nf(m, k, eng);
      AckNF nf = knf_fin(bn(m), k, eng);
      CHECK(u(nf.index.is_zero() ? bn(0) : nf.index.finite_value()) == f.a);
      CHECK(u(nf.b) == f.b);
      CHECK(u(nf.l) == f.l);
      CHECK(nf.bracket_lo);
      CHECK(nf.bracket_hi);
    }
  }
}

TEST_CASE("uniqueness by exhaustive bracket scan") {
  AckEvaluator eng;
  for (uint64_t m = 1; m <= 120; ++m) {
    int hits = 0;
    for (uint64_t a = 0; a <= 3; ++a) {
      BudgetedNat va0 = eng.ack_uu(a, 3, 0);
      BudgetedNat va1 = eng.ack_uu(a + 1, 3, 0);
      if (!(bn_le(va0, bn(m)) && bn_lt(bn(m), va1))) continue;
      for (uint64_t b = 0; b <= m; ++b) {
        BudgetedNat vb = eng.ack_uu(a, 3, b);
        BudgetedNat vb1 = eng.ack_uu(a, 3, b + 1);
        if (bn_le(vb, bn(m)) && bn_lt(bn(m), vb1)) {
          ++hits;
          CHECK(u(vb) <= m);
        }
        if (!vb.is_exact() || u(vb) > m) break;
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("knf_ord examples") {
  AckEvaluator eng;
  AckNF n39 = knf_ord(bn(39), 3, eng);
  CHECK(u(n39.index.finite_value()) == 2);
  CHECK(n39.b.is_zero());
  CHECK(n39.l.is_zero());

  AckNF n5 = knf_ord(bn(5), 3, eng);
  CHECK(u(n5.index.finite_value()) == 1);
  CHECK(n5.b.is_zero());
  CHECK(u(n5.l) == 2);

  AckNF n1 = knf_ord(bn(1), 4, eng);
  CHECK(n1.index.is_zero());
  CHECK(n1.b.is_zero());
  CHECK(n1.l.is_zero());
  CHECK(n1.domain_complete);
}

TEST_CASE("hereditary and eval_term") {
  AckEvaluator eng;
  CHECK(hereditary(bn(0), 3, 1, eng) == nullptr);

  AckTerm t4 = hereditary(bn(4), 3, 1, eng);
  REQUIRE(t4);
  CHECK(u(t4->index.finite_value()) == 1);
  CHECK(t4->b == nullptr);
  CHECK(t4->l == 1);
  AckTerm inner = t4->index.terms[0].coeff.term;
  REQUIRE(inner);
  CHECK(inner->index.is_zero());
  CHECK(inner->b == nullptr);
  CHECK(inner->l == 0);

  AckTerm t39 = hereditary(bn(39), 3, 1, eng);
  CHECK(u(t39->index.finite_value()) == 2);
  CHECK(u(eval_term(t39, 3, eng)) == 39);

  for (uint32_t k = 3; k <= 5; ++k)
    for (uint64_t m = 0; m <= 300; ++m)
      CHECK(u(eval_term(hereditary(bn(m), k, 1, eng), k, eng)) == m);
}

TEST_CASE("classify_type") {
  AckEvaluator eng;
  CHECK(classify_type_u(2, 3, eng) == KType::SuccessorType);
  CHECK(classify_type_u(3, 3, eng) == KType::LimitType);
  CHECK(classify_type_u(40, 3, eng) == KType::SuccessorType);
  CHECK(classify_type_u(39, 3, eng) == KType::LimitType);
  CHECK_THROWS_AS(classify_type_u(0, 3, eng), precondition_error);
}

TEST_CASE("normal form stability under minus one") {
  AckEvaluator eng;
  for (uint64_t m = 2; m <= 300; ++m) {
    AckNF nf = knf_fin(bn(m), 3, eng);
    AckNF prev = knf_fin(bn(m - 1), 3, eng);
    if (!nf.l.is_zero()) {
      // same index and b, remainder drops by one
      CHECK(cmp_ordix(prev.index, nf.index) == Cmp::EQ);
      CHECK(bn_cmp(prev.b, nf.b) == Cmp::EQ);
      CHECK(u(prev.l) == u(nf.l) - 1);
    } else if (!nf.b.is_zero()) {
      CHECK(cmp_ordix(prev.index, nf.index) == Cmp::EQ);
      CHECK(u(prev.b) == u(nf.b) - 1);
    }
  }
  // A_a^j(0) stays in normal form for 0 < j < k
  for (uint64_t a = 1; a <= 2; ++a) {
    BudgetedNat v = bn(0);
    for (uint64_t j = 1; j < 3; ++j) {
      v = eng.ack_u(a, 3, v);
      if (!v.is_exact()) break;
      AckNF nf = knf_fin(v, 3, eng);
      CHECK(u(nf.index.finite_value()) == a);
      CHECK(nf.l.is_zero());
    }
  }
}

TEST_CASE("enumerate_ncount_le") {
  auto v3 = enumerate_ncount_le(3);
  // 0,1,2,3,w,w+1,w+2,w*2,w*3,w*2+1,w+... plus w^w etc.
  CHECK(v3.front() == e0_zero());
  for (const OrdE0& a : v3) CHECK(ncount(a) <= 3);
  for (size_t i = 1; i < v3.size(); ++i) CHECK(e0_lt(v3[i - 1], v3[i]));
  bool has_ww = false;
  for (const OrdE0& a : v3) has_ww = has_ww || a == parse_e0("w^(w)");
  CHECK(has_ww);
  auto v5 = enumerate_ncount_le(5);
  CHECK(v5.size() > v3.size());
}

TEST_CASE("format helpers") {
  AckEvaluator eng;
  AckTerm t = hereditary(bn(100), 3, 1, eng);
  CHECK(format_nf(t, 3, eng) == "A_2(3,0)+61");
  CHECK(format_nf(hereditary(bn(3), 3, 1, eng), 3, eng) == "A_1(3,0)");
}
