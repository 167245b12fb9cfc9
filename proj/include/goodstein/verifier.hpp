#pragma once

#include <string>
#include <vector>

#include "goodstein/goodstein.hpp"

#include "json.hpp"

namespace gs {

struct SuiteParams {
  uint64_t m_max = 200;
  uint32_t k_min = 3;
  uint32_t k_max = 4;
  uint64_t samples = 1000;
  uint64_t seed = 1;
  uint64_t ncount_max = 7;
  uint64_t depth_max = 5;
  EvalCaps caps;
};

struct Counterexample {
  std::string input;
  std::string detail;
};

// Every suite separates "checked and true" (cases), counterexamples and
// budget-inconclusive instances; nothing is silently skipped.
struct Report {
  std::string suite;
  uint64_t cases = 0;
  uint64_t evaluable = 0;
  uint64_t inconclusive = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
  nlohmann::ordered_json to_json() const;
};

// Suite ids S1..S13.
Report run_suite(const std::string& id, const SuiteParams& p);
std::vector<std::string> suite_ids();

}  // namespace gs
