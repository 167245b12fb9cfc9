#include "doctest.h"

#include "goodstein/gen.hpp"
#include "goodstein/ord_e0.hpp"

using namespace gs;

namespace {
OrdE0 P(const std::string& s) { return parse_e0(s); }
}  // namespace

TEST_CASE("cmp_e0 basics") {
  CHECK(cmp_e0(e0_zero(), e0_zero()) == Cmp::EQ);
  CHECK(cmp_e0(e0_omega(), P("w+1")) == Cmp::LT);
  CHECK(cmp_e0(P("w^(w)"), P("w^(2)*5+w")) == Cmp::GT);
  CHECK(cmp_e0(e0_zero(), e0_nat(1)) == Cmp::LT);
}

TEST_CASE("add_e0") {
  OrdE0 a = P("w^(2)+w");
  CHECK(add_e0(e0_zero(), a) == a);
  CHECK(add_e0(e0_omega(), P("w^(w)")) == P("w^(w)"));
  // term-merge oracle: w^2+w plus w+1 merges the w-blocks
  CHECK(format_e0(add_e0(P("w^(2)+w"), P("w+1"))) == "w^(2)+w*2+1");
}

TEST_CASE("nsub") {
  CHECK(nsub(2, e0_omega()) == e0_omega());
  CHECK(nsub(2, e0_nat(5)) == e0_nat(3));
  CHECK(nsub(7, e0_nat(5)) == e0_zero());
}

TEST_CASE("fund_e0") {
  CHECK(fund_e0(P("w+1"), 7) == P("w"));        // successor clause
  CHECK(fund_e0(P("w^(w)"), 2) == P("w^(2)"));  // limit exponent
  CHECK(fund_e0(P("w^(w+1)"), 2) == P("w^(w)*2"));
  CHECK(fund_e0(e0_zero(), 3) == e0_zero());
  CHECK(fund_e0(P("w^(2)*3"), 2) == P("w^(2)*2+w*2"));
  CHECK(fund_e0(P("w"), 0) == e0_zero());
}

TEST_CASE("mc and ncount") {
  CHECK(mc_e0(e0_zero()) == 0);
  CHECK(mc_e0(e0_omega()) == 1);
  CHECK(mc_e0(P("w^(w)*3+5")) == 5);
  CHECK(ncount(e0_zero()) == 0);
  CHECK(ncount(e0_omega()) == 1);
  CHECK(ncount(P("w^(w)*2+w")) == 5);
}

TEST_CASE("leq_l") {
  OrdE0 a = P("w^(2)+w");
  CHECK(leq_l(a, a, 3, 0).kind == LeqLResult::Reached);
  auto r = leq_l(e0_omega(), e0_nat(3), 3, 10);
  CHECK(r.kind == LeqLResult::Reached);
  CHECK(r.steps == 1);
  auto r2 = leq_l(P("w^(w)"), P("w^(2)"), 2, 10);
  CHECK(r2.kind == LeqLResult::Reached);
  CHECK(r2.steps == 1);
  CHECK(leq_l(P("w^(w)"), P("w^(2)+1"), 2, 100).kind == LeqLResult::NotReached);
  CHECK(leq_l(P("w^(w^(w))"), e0_nat(1), 2, 3).kind == LeqLResult::BudgetExhausted);
  CHECK_THROWS_AS(leq_l(a, a, 0, 1), precondition_error);
}

TEST_CASE("grammar round trips") {
  for (const char* s : {"0", "w^(w)+w*2+1", "w^(w^(w))", "w", "17",
                        "w^(w+2)*3+w^(2)+5"}) {
    CHECK(format_e0(parse_e0(s)) == s);
  }
  CHECK_THROWS_AS(parse_e0("w^(0)"), parse_error);
  CHECK_THROWS_AS(parse_e0("w^(1)"), parse_error);
  CHECK_THROWS_AS(parse_e0("w*1"), parse_error);
  CHECK_THROWS_AS(parse_e0("w+w"), parse_error);
  CHECK_THROWS_AS(parse_e0("1+w"), parse_error);
  CHECK_THROWS_AS(parse_e0(""), parse_error);
  CHECK_THROWS_AS(parse_e0("w^(w)+"), parse_error);
  CHECK_THROWS_AS(parse_e0("07"), parse_error);
}

TEST_CASE("order and fundamental sequence properties") {
  TermGen g(7);
  for (int i = 0; i < 500; ++i) {
    OrdE0 a = g.e0(7, 4), b = g.e0(7, 4), c = g.e0(7, 4);
    // trichotomy
    int rel = (cmp_e0(a, b) == Cmp::LT) + (cmp_e0(a, b) == Cmp::EQ) +
              (cmp_e0(a, b) == Cmp::GT);
    CHECK(rel == 1);
    CHECK(cmp_e0(a, b) == flip(cmp_e0(b, a)));
    // transitivity on the sampled triple
    if (cmp_e0(a, b) != Cmp::GT && cmp_e0(b, c) != Cmp::GT)
      CHECK(cmp_e0(a, c) != Cmp::GT);
    // round trip through the grammar
    CHECK(parse_e0(format_e0(a)) == a);
    // addition
    CHECK(add_e0(a, e0_zero()) == a);
    CHECK(add_e0(add_e0(a, b), c) == add_e0(a, add_e0(b, c)));
    CHECK(e0_le(a, add_e0(a, b)));
    if (!b.is_zero()) CHECK(e0_lt(a, add_e0(a, b)));
    // fundamental sequences descend and grow in x
    if (a.is_limit()) {
      for (uint64_t x = 0; x < 3; ++x) {
        CHECK(e0_lt(fund_e0(a, x), a));
        CHECK(e0_lt(fund_e0(a, x), fund_e0(a, x + 1)));
      }
    }
  }
}
