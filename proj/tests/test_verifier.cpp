#include "doctest.h"

#include "goodstein/verifier.hpp"

using namespace gs;

TEST_CASE("S3 small sweep is clean") {
  SuiteParams p;
  p.m_max = 200;
  p.k_min = 3;
  p.k_max = 3;
  Report r = run_suite("S3", p);
  CHECK(r.ok());
  CHECK(r.cases >= 200);
}

TEST_CASE("S6 sampled Bachmann check is clean") {
  SuiteParams p;
  p.samples = 1000;
  p.seed = 1;
  Report r = run_suite("S6", p);
  CHECK(r.ok());
  CHECK(r.cases > 100);
}

TEST_CASE("vacuous range gives an empty report") {
  SuiteParams p;
  p.m_max = 0;
  Report r = run_suite("S1", p);
  CHECK(r.ok());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SuiteParams p;
  p.samples = 300;
  p.seed = 42;
  Report a = run_suite("S8", p);
  Report b = run_suite("S8", p);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("unknown suite id is rejected") {
  SuiteParams p;
  CHECK_THROWS_AS(run_suite("S99", p), precondition_error);
}
