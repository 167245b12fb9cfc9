#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goodstein/common.hpp"

namespace gs {

struct E0Term;

// Ordinal below epsilon_0 in Cantor normal form: a sum of omega-power terms
// with strictly decreasing exponents and machine-word coefficients >= 1.
// The empty sum is 0. Values are immutable in practice; all operations are
// pure and return fresh terms.
struct OrdE0 {
  std::vector<E0Term> terms;

  OrdE0();
  OrdE0(const OrdE0&);
  OrdE0(OrdE0&&) noexcept;
  OrdE0& operator=(const OrdE0&);
  OrdE0& operator=(OrdE0&&) noexcept;
  ~OrdE0();

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const;          // 0 or a single exp-0 term
  uint64_t finite_value() const;   // requires is_finite()
  bool is_successor() const;       // nonzero with a trailing exp-0 term
  bool is_limit() const { return !is_zero() && !is_successor(); }
};

struct E0Term {
  OrdE0 exp;
  uint64_t coeff;
};

OrdE0 e0_zero();
OrdE0 e0_nat(uint64_t n);
OrdE0 e0_omega();
// omega^e * c (c >= 1); e == 0 yields the natural c.
OrdE0 e0_pow(const OrdE0& e, uint64_t c = 1);

Cmp cmp_e0(const OrdE0& a, const OrdE0& b);
bool operator==(const OrdE0& a, const OrdE0& b);
inline bool operator!=(const OrdE0& a, const OrdE0& b) { return !(a == b); }
inline bool e0_lt(const OrdE0& a, const OrdE0& b) { return cmp_e0(a, b) == Cmp::LT; }
inline bool e0_le(const OrdE0& a, const OrdE0& b) { return cmp_e0(a, b) != Cmp::GT; }

// Left-absorbing ordinal addition in CNF.
OrdE0 add_e0(const OrdE0& a, const OrdE0& b);
OrdE0 add_e0_nat(const OrdE0& a, uint64_t n);

// -m + a: unchanged when a is infinite, truncated subtraction when finite.
OrdE0 nsub(uint64_t m, const OrdE0& a);

// Successor a+1.
OrdE0 succ_e0(const OrdE0& a);
// Predecessor of a successor ordinal (a must be a successor).
OrdE0 pred_e0(const OrdE0& a);

// omega * a, i.e. every exponent bumped by 1 on the left.
OrdE0 omega_times(const OrdE0& a);
// omega^p * a for machine p.
OrdE0 omega_power_times(uint64_t p, const OrdE0& a);

// Standard fundamental sequence a[x]; 0[x]=0, (b+1)[x]=b.
OrdE0 fund_e0(const OrdE0& a, uint64_t x);

// Maximal coefficient appearing hereditarily; mc(0)=0.
uint64_t mc_e0(const OrdE0& a);

// Number of omega occurrences with coefficients expanded as repetition:
// N(0)=0, N(w^e*c + rest) = c*(1+N(e)) + N(rest). Saturates at UINT64_MAX.
uint64_t ncount(const OrdE0& a);

struct LeqLResult {
  enum Kind { Reached, NotReached, BudgetExhausted } kind;
  uint64_t steps = 0;
};

// Does iterating [l] from a reach b? Requires l >= 1.
LeqLResult leq_l(const OrdE0& a, const OrdE0& b, uint64_t l, uint64_t step_budget);

// Canonical ASCII grammar:
//   expr := "0" | term ("+" term)*
//   term := "w" ["^(" expr ")"] ["*" nat] | nat
// Printing omits an exponent of 1 and a coefficient of 1; w^(0)*c appears as
// the bare natural c. parse_e0 accepts only the canonical form.
OrdE0 parse_e0(const std::string& s);
std::string format_e0(const OrdE0& a);

}  // namespace gs
