#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "goodstein/common.hpp"
#include "goodstein/ord_e0.hpp"

namespace gs {

struct AckNode;
// Hereditary normal-form term for a natural number at a contextual base k:
// null is 0, a node is A_index(k, b) + l. The base is not stored; every
// operation takes it as a parameter.
using AckTerm = std::shared_ptr<const AckNode>;

struct IxTerm;

// Ordinal index in mixed Cantor normal form: exponents are again indices,
// coefficients are numbers carried as a value (possibly Exceeded) together
// with an optional hereditary term. Plain finite indices are the single
// exp-0 case; part 1 never leaves it.
struct OrdIx {
  std::vector<IxTerm> terms;

  OrdIx();
  OrdIx(const OrdIx&);
  OrdIx(OrdIx&&) noexcept;
  OrdIx& operator=(const OrdIx&);
  OrdIx& operator=(OrdIx&&) noexcept;
  ~OrdIx();

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const;
  BudgetedNat finite_value() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
};

struct IxCoeff {
  BudgetedNat value;
  AckTerm term;  // may be null when only the value is known
};

struct IxTerm {
  OrdIx exp;
  IxCoeff coeff;
};

struct AckNode {
  OrdIx index;
  AckTerm b;
  uint64_t l;
  // value of the b-argument; the number a node denotes survives base changes
  // that keep components verbatim
  BudgetedNat b_value;
};

inline AckTerm ack_zero() { return nullptr; }
AckTerm mk_node(OrdIx index, AckTerm b, uint64_t l, BudgetedNat b_value);
uint64_t node_count(const AckTerm& t);

OrdIx ix_zero();
OrdIx ix_fin(const BudgetedNat& value, AckTerm term = nullptr);
OrdIx ix_fin_u(uint64_t value);
OrdIx ix_pow(const OrdIx& e, IxCoeff c);
OrdIx ix_succ(const OrdIx& a);
OrdIx ix_pred(const OrdIx& a);  // requires is_successor()

// Compare by value; coefficient pairs that are both Exceeded cannot be
// ordered and raise internal_error.
Cmp cmp_ordix(const OrdIx& a, const OrdIx& b);
bool ordix_eq(const OrdIx& a, const OrdIx& b);

// Fundamental sequence with a numeric argument (coefficients handled by value).
OrdIx fund_ordix(const OrdIx& a, const BudgetedNat& x);

uint64_t ncount_ordix(const OrdIx& a);  // saturating
uint64_t mc_ordix(const OrdIx& a);      // saturating; Exceeded coeffs saturate

OrdIx ordix_from_e0(const OrdE0& a, uint64_t cap_bits);
// Requires all coefficients to fit a machine word.
OrdE0 ordix_to_e0(const OrdIx& a);

// Structural serialization, stable across runs; used as memo key.
std::string ser_ordix(const OrdIx& a);
std::string ser_ackterm(const AckTerm& t);

}  // namespace gs
