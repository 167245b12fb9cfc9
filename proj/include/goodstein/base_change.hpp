#pragma once

#include "goodstein/normal_form.hpp"

namespace gs {

enum class BCOp { Prime, Second, First, Iter };

// Base change k -> k+1 on a hereditary k-normal-form term:
//   Prime  recurses the index and the b-argument,
//   Second recurses only b (index kept verbatim),
//   First  recurses only the index (b kept verbatim),
//   Iter   changes nothing but the base.
// Purely structural; values are realized separately and may be Exceeded.
AckTerm bc(const AckTerm& t, uint32_t k, BCOp op, AckEvaluator& eng);

// CNF index base change: exponents recursed as ordinals, coefficients as
// numbers. op must be Prime or First.
OrdIx bc_ord(const OrdIx& ix, uint32_t k, BCOp op, AckEvaluator& eng);

}  // namespace gs
