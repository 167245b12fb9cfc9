#pragma once

#include <string>
#include <vector>

#include "goodstein/assignment.hpp"
#include "goodstein/base_change.hpp"

#include "json.hpp"

namespace gs {

enum class Variant { Prime, Second, First, Iter };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);

struct GoodsteinState {
  uint64_t l = 0;
  uint32_t k = 3;
  AckTerm term;
  BudgetedNat value;
};

struct StepOutcome {
  bool budget_stopped = false;
  GoodsteinState next;
};

// One round: base change for the variant, subtract one, renormalize at k+1.
// Over-cap values survive only while the remainder part can absorb the
// decrement; otherwise the step reports a budget stop.
StepOutcome gstep(const GoodsteinState& s, Variant v, int part, AckEvaluator& eng);

struct StepRecord {
  uint64_t l = 0;
  uint32_t k = 3;
  BudgetedNat value;
  AckTerm term;
  std::string nf_index, nf_b, nf_l;
  std::string ordinal;
  bool descent_ok = true;
};

struct Trace {
  std::string seed;
  Variant variant = Variant::Prime;
  int part = 1;
  std::vector<StepRecord> steps;
  enum class Status { Zero, MaxSteps, Budget } status = Status::MaxSteps;

  // first l with m_l = 0; only meaningful when status == Zero
  uint64_t zero_at() const { return steps.empty() ? 0 : steps.back().l; }
  bool all_descent_ok() const;
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

Trace run(const AckTerm& seed, Variant v, int part, uint64_t max_steps,
          AckEvaluator& eng);
Trace run_m(const BudgetedNat& m, Variant v, int part, uint64_t max_steps,
            AckEvaluator& eng);

// Seed constructors: part 1 gives A_2(3,0), then A_{m(r)}(3,0); part 2 gives
// A_{w_r}(3,0) along the omega tower.
AckTerm mr_seed(uint64_t r, int part, AckEvaluator& eng);

// Formatted o(m,l) for the variant's paired map (psi, chi, xi, ord).
std::string step_ordinal(const AckTerm& t, uint32_t k, Variant v, int part,
                         AckEvaluator& eng);

}  // namespace gs
