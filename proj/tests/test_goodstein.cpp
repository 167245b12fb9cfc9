#include "doctest.h"

#include "goodstein/goodstein.hpp"

using namespace gs;

namespace {
BudgetedNat bn(uint64_t v) { return BudgetedNat::of(BigNat(v), 65536); }
uint64_t u(const BudgetedNat& v) { return v.value().convert_to<uint64_t>(); }

// independent step simulation on plain values
uint64_t brute_bc_val(uint64_t m, uint32_t k, Variant v, AckEvaluator& eng) {
  if (m == 0) return 0;
  AckNF nf = knf_fin(bn(m), k, eng);
  uint64_t a = nf.index.is_zero() ? 0 : u(nf.index.finite_value());
  uint64_t b = u(nf.b), l = u(nf.l);
  uint64_t a2 = v == Variant::Prime || v == Variant::First
                    ? brute_bc_val(a, k, v, eng)
                    : a;
  uint64_t b2 = v == Variant::Prime || v == Variant::Second
                    ? brute_bc_val(b, k, v, eng)
                    : b;
  return u(eng.ack_uu(a2, k + 1, b2)) + l;
}

std::vector<uint64_t> brute_trace(uint64_t m, Variant v, uint64_t max_steps,
                                  AckEvaluator& eng) {
  std::vector<uint64_t> out{m};
  uint32_t k = 3;
  while (m > 0 && out.size() <= max_steps) {
    m = brute_bc_val(m, k, v, eng) - 1;
    ++k;
    out.push_back(m);
  }
  return out;
}
}  // namespace

TEST_CASE("gstep examples") {
  AckEvaluator eng;
  GoodsteinState s{0, 3, hereditary(bn(4), 3, 1, eng), bn(4)};
  StepOutcome o = gstep(s, Variant::Prime, 1, eng);
  CHECK_FALSE(o.budget_stopped);
  CHECK(u(o.next.value) == 4);
  CHECK(o.next.k == 4);

  GoodsteinState s1{5, 8, hereditary(bn(1), 8, 1, eng), bn(1)};
  CHECK(gstep(s1, Variant::Second, 1, eng).next.value.is_zero());

  GoodsteinState s39{0, 3, hereditary(bn(39), 3, 1, eng), bn(39)};
  CHECK(u(gstep(s39, Variant::Prime, 1, eng).next.value) == 339);
}

TEST_CASE("run termination oracle") {
  AckEvaluator eng;
  Trace t2 = run_m(bn(2), Variant::Prime, 1, 100, eng);
  CHECK(t2.status == Trace::Status::Zero);
  CHECK(t2.zero_at() == 2);

  Trace t4 = run_m(bn(4), Variant::Prime, 1, 100, eng);
  CHECK(t4.status == Trace::Status::Zero);
  CHECK(t4.zero_at() == 6);
  std::vector<uint64_t> expect{4, 4, 4, 3, 2, 1, 0};
  REQUIRE(t4.steps.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(u(t4.steps[i].value) == expect[i]);
  CHECK(t4.all_descent_ok());

  Trace t0 = run_m(bn(0), Variant::First, 2, 100, eng);
  CHECK(t0.status == Trace::Status::Zero);
  CHECK(t0.steps.empty());
}

TEST_CASE("runs agree with the brute simulation") {
  AckEvaluator eng;
  for (uint64_t m : {2ull, 4ull, 5ull, 6ull}) {
    for (Variant v : {Variant::Prime, Variant::Second, Variant::First,
                      Variant::Iter}) {
      Trace tr = run_m(bn(m), v, 1, 10000, eng);
      std::vector<uint64_t> expect = brute_trace(m, v, 10000, eng);
      REQUIRE(tr.status == Trace::Status::Zero);
      REQUIRE(tr.steps.size() == expect.size());
      for (size_t i = 0; i < expect.size(); ++i)
        CHECK(u(tr.steps[i].value) == expect[i]);
      CHECK(tr.all_descent_ok());
    }
  }
}

TEST_CASE("mr_seed") {
  AckEvaluator eng;
  AckTerm s1 = mr_seed(1, 1, eng);
  CHECK(u(eval_term(s1, 3, eng)) == 39);

  AckTerm s2 = mr_seed(2, 1, eng);
  REQUIRE(s2);
  CHECK(u(s2->index.finite_value()) == 39);
  CHECK(eval_term(s2, 3, eng).is_exceeded());

  AckTerm p2 = mr_seed(1, 2, eng);
  CHECK(cmp_ordix(p2->index, ordix_from_e0(e0_omega(), 65536)) == Cmp::EQ);
}

TEST_CASE("trace JSON matches the pinned schema") {
  AckEvaluator eng;
  Trace tr = run_m(bn(4), Variant::Prime, 1, 100, eng);
  auto j = tr.to_json();
  CHECK(j["seed"] == "4");
  CHECK(j["variant"] == "prime");
  CHECK(j["part"] == 1);
  CHECK(j["status"] == "zero");
  REQUIRE(j["steps"].is_array());
  auto s0 = j["steps"][0];
  CHECK(s0["l"] == 0);
  CHECK(s0["k"] == 3);
  CHECK(s0["value"] == "4");
  CHECK(s0["nf"]["index"] == "1");
  CHECK(s0["nf"]["b"] == "0");
  CHECK(s0["nf"]["l"] == "1");
  CHECK(s0["ordinal"] == "w+1");
  CHECK(s0["descent_ok"] == true);
  // key order is part of the schema
  std::string dumped = j.dump();
  CHECK(dumped.find("\"seed\"") < dumped.find("\"variant\""));
  CHECK(dumped.find("\"variant\"") < dumped.find("\"part\""));
  CHECK(dumped.find("\"steps\"") < dumped.find("\"status\""));
}

TEST_CASE("giant versus illusionary from seed 39") {
  AckEvaluator eng;
  Trace prime = run_m(bn(39), Variant::Prime, 1, 300, eng);
  CHECK(prime.status == Trace::Status::MaxSteps);
  CHECK(prime.all_descent_ok());

  Trace iter = run_m(bn(39), Variant::Iter, 1, 300, eng);
  CHECK(iter.status != Trace::Status::Zero);
  CHECK(iter.all_descent_ok());
  // ord starts at w^2*2 and leaves that band immediately
  CHECK(iter.steps[0].ordinal == "w^(2)*2");
  bool below = false;
  OrdE0 band = parse_e0("w^(2)*2");
  for (const StepRecord& s : iter.steps)
    below = below || e0_lt(parse_e0(s.ordinal), band);
  CHECK(below);
}
