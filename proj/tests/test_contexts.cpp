#include "doctest.h"

#include "goodstein/ackermann.hpp"
#include "goodstein/e0_context.hpp"
#include "goodstein/gen.hpp"
#include "goodstein/normal_form.hpp"

using namespace gs;

namespace {
OrdE0 P(const std::string& s) { return parse_e0(s); }
}  // namespace

TEST_CASE("subst") {
  E0Context id = hole_context();
  CHECK(subst(id, P("w*2")) == P("w*2"));

  E0Context c1;  // w^2 + [[.]]
  c1.prefix = P("w^(2)").terms;
  CHECK(subst(c1, P("w*3")) == P("w^(2)+w*3"));

  E0Context inner;  // w + [[.]]
  inner.prefix = P("w").terms;
  E0Context c2;  // w^(w+[[.]])
  c2.sub = std::make_shared<E0Context>(inner);
  CHECK(subst(c2, e0_nat(2)) == P("w^(w+2)"));

  // merging at the junction: [[.]] + w filled with w*2 gives w*3
  E0Context c3;
  c3.suffix = P("w").terms;
  CHECK(subst(c3, P("w*2")) == P("w*3"));

  CHECK_THROWS_AS(subst(c1, P("w^(5)")), invalid_filler_error);
}

TEST_CASE("truncate") {
  E0Context id = hole_context();
  CHECK(format_context(truncate(id)) == "[[_]]");

  E0Context c1;  // w^2 + [[.]] + w
  c1.prefix = P("w^(2)").terms;
  c1.suffix = P("w").terms;
  CHECK(format_context(truncate(c1)) == "w^(2)+[[_]]");

  // hereditary cut: w^(w+[[.]]+1) + 5  ->  w^(w+[[.]])
  E0Context inner;
  inner.prefix = P("w").terms;
  inner.suffix = P("1").terms;
  E0Context c2;
  c2.sub = std::make_shared<E0Context>(inner);
  c2.suffix = P("5").terms;
  CHECK(format_context(truncate(c2)) == "w^(w+[[_]])");
  CHECK(format_context(truncate(truncate(c2))) == format_context(truncate(c2)));
}

TEST_CASE("star_decompose examples") {
  CHECK(star_decompose(e0_nat(5), e0_nat(6)).kind == StarResult::SuccessorCase);

  StarResult r = star_decompose(P("w*2"), P("w^(2)"));
  REQUIRE(r.kind == StarResult::ContextCase);
  CHECK(format_context(r.lambda) == "[[_]]");
  CHECK(r.gamma == e0_nat(1));
  CHECK(r.r == 2);
  CHECK(subst(truncate(r.lambda), e0_pow(r.gamma, r.r + 1)) == P("w*3"));

  CHECK(star_decompose(P("w"), P("w^(2)+w")).kind == StarResult::BelowFirst);
  CHECK_THROWS_AS(star_decompose(P("w"), P("w")), precondition_error);
}

TEST_CASE("star_decompose round trip on samples") {
  TermGen g(5);
  int contexts = 0;
  for (int i = 0; i < 3000; ++i) {
    OrdE0 x = g.e0(7, 4), y = g.e0(7, 4);
    Cmp cm = cmp_e0(x, y);
    if (cm == Cmp::EQ) continue;
    OrdE0 a = cm == Cmp::LT ? x : y;
    OrdE0 b = cm == Cmp::LT ? y : x;
    StarResult r = star_decompose(a, b);
    if (r.kind == StarResult::SuccessorCase) {
      CHECK(b == succ_e0(a));
    } else if (r.kind == StarResult::BelowFirst) {
      CHECK(e0_lt(a, fund_e0(b, 1)));
    } else {
      ++contexts;
      CHECK(subst(r.lambda, e0_pow(r.gamma, r.r)) == a);
      CHECK(subst(truncate(r.lambda), e0_pow(succ_e0(r.gamma), 1)) == b);
      CHECK(e0_lt(a, subst(truncate(r.lambda), e0_pow(r.gamma, r.r + 1))));
    }
  }
  CHECK(contexts > 20);  // the interesting case must actually be exercised
}

TEST_CASE("lambda_context") {
  AckEvaluator eng;
  auto classify = [&](uint64_t q) { return classify_type_u(q, 3, eng); };

  auto r1 = lambda_context(P("w*3"), 3, classify);
  CHECK(format_context(r1.ctx) == "[[_]]");
  CHECK(r1.gamma == e0_nat(1));
  CHECK(r1.p == 3);

  CHECK_THROWS_AS(lambda_context(e0_nat(5), 3, classify), precondition_error);

  auto r2 = lambda_context(P("w^(w)*2"), 3, classify);
  CHECK(format_context(r2.ctx) == "w^(w)+w^([[_]])");
  CHECK(r2.gamma == e0_nat(1));
  CHECK(r2.p == 1);
  CHECK(subst(r2.ctx, e0_pow(r2.gamma, r2.p)) == P("w^(w)*2"));

  // round trip on samples
  TermGen g(9);
  for (int i = 0; i < 400; ++i) {
    OrdE0 a = g.e0(6, 3);
    if (a.is_zero()) continue;
    if (a.is_successor() &&
        classify(a.terms.back().coeff) == KType::SuccessorType)
      continue;
    auto r = lambda_context(a, 3, classify);
    CHECK(subst(r.ctx, e0_pow(r.gamma, r.p)) == a);
  }
}

TEST_CASE("enumerate_decompositions rebuilds the input") {
  TermGen g(13);
  for (int i = 0; i < 200; ++i) {
    OrdE0 a = g.e0(5, 3);
    for (const Decomposition& d : enumerate_decompositions(a)) {
      CHECK(subst(d.ctx, e0_pow(d.gamma, d.r)) == a);
      // the star fill must be well formed
      OrdE0 up = subst(truncate(d.ctx), e0_pow(succ_e0(d.gamma), 1));
      CHECK(e0_lt(a, up));
    }
  }
}
