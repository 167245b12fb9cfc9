#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "goodstein/ord_e0.hpp"

namespace gs {

// Ordinal context with exactly one hole. The hole is either a summand slot
// between prefix and suffix, or sits inside the exponent of a power term
// (coefficient 1) placed between them. Filling must preserve CNF ordering;
// adjacent equal exponents merge.
struct E0Context {
  std::vector<E0Term> prefix;
  std::shared_ptr<const E0Context> sub;  // hole inside an exponent when set
  std::vector<E0Term> suffix;
};

E0Context hole_context();

// Fill the hole. Throws invalid_filler_error when the ordering would break.
OrdE0 subst(const E0Context& c, const OrdE0& filler);

// Cut off everything after the hole, hereditarily through exponents.
E0Context truncate(const E0Context& c);

std::string format_context(const E0Context& c);

struct StarResult {
  enum Kind { SuccessorCase, BelowFirst, ContextCase } kind;
  E0Context lambda;  // ContextCase only
  OrdE0 gamma;
  uint64_t r = 0;
};

// Constructive trichotomy for a < b: either b = a+1, or a < b[1], or
// a = lambda[[w^gamma * r]] with b = lambda*[[w^(gamma+1)]].
StarResult star_decompose(const OrdE0& a, const OrdE0& b);

struct LambdaContextResult {
  E0Context ctx;
  OrdE0 gamma;
  uint64_t p = 0;
};

// The canonical context of a: a = ctx[[w^gamma * p]], defined for a > 0 whose
// trailing natural part (if any) is not of successor type under classify.
LambdaContextResult lambda_context(const OrdE0& a, uint32_t k,
                                   const std::function<KType(uint64_t)>& classify);

struct Decomposition {
  E0Context ctx;
  OrdE0 gamma;
  uint64_t r;
};

// All (lambda, gamma, r) with a = lambda[[w^gamma * r]] whose truncated fill
// lambda*[[w^(gamma+1)]] is well formed (hole leads its coefficient block).
std::vector<Decomposition> enumerate_decompositions(const OrdE0& a);

}  // namespace gs
