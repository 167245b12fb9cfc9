#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goodstein/ackermann.hpp"

namespace gs {

// Flat k-normal-form certificate: m = A_index(k, b) + l with index maximal,
// then b maximal, both bracket conditions checked against capped evaluation.
struct AckNF {
  OrdIx index;
  BudgetedNat b;
  BudgetedNat l;
  uint32_t k = 3;
  bool bracket_lo = false;      // A_index(k,0) <= m
  bool bracket_hi = false;      // m < A_(index+1)(k,0)
  bool domain_complete = true;  // false when maximality rests on the ncap domain
};

// Part 1: the index ranges over the naturals; found by increasing scan.
AckNF knf_fin(const BudgetedNat& m, uint32_t k, AckEvaluator& eng);

// Part 2: the index additionally ranges over the enumerated ordinals with
// ncount <= caps().ncap; maximality is certified relative to that domain.
AckNF knf_ord(const BudgetedNat& m, uint32_t k, AckEvaluator& eng);

// Hereditary development of m, its index coefficients and its b-argument.
AckTerm hereditary(const BudgetedNat& m, uint32_t k, int part, AckEvaluator& eng);

// k-limit type: l = 0 and index >= 1; k-successor type otherwise. m > 0.
KType classify_type(const BudgetedNat& m, uint32_t k, AckEvaluator& eng);
KType classify_type_u(uint64_t m, uint32_t k, AckEvaluator& eng);

BudgetedNat eval_term(const AckTerm& t, uint32_t k, AckEvaluator& eng);

// All CNF ordinals with ncount <= budget, ascending.
std::vector<OrdE0> enumerate_ncount_le(uint64_t budget);

// Attach hereditary coefficient terms (base k) to a machine-coefficient index.
OrdIx attach_index_terms(const OrdIx& ix, uint32_t k, int part, AckEvaluator& eng);

// Display forms: A_2(3,0)+61, with nested structural forms for components
// whose value is over cap.
std::string format_nf(const AckTerm& t, uint32_t k, AckEvaluator& eng);
std::string format_ordix(const OrdIx& ix, uint32_t k, AckEvaluator& eng);
std::string format_component(const AckTerm& t, uint32_t k, AckEvaluator& eng);

}  // namespace gs
