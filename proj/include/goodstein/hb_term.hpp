#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goodstein/common.hpp"
#include "goodstein/ord_e0.hpp"

namespace gs {

struct HBMono;

// Notation term for ordinals below the Howard-Bachmann ordinal, shared by the
// systems OT (psi) and OT' (Psi). A term is a sum of monomials with strictly
// decreasing bases:
//   Om    W^e * d   uncountable part, e > 0 a term, d a countable term >= 1
//   UPsi  P(a)      collapsed value of the OT' system (argument >= Omega)
//   Psi   p(a)*n    collapsed value of the OT system
//   WPow  w^e * n   countable omega power, e > 0 with no Om/Psi inside
//   Nat   n
// p(0) is normalized to 1 and P(a) with a purely countable argument to
// w^2 * a, so those shapes never appear as nodes.
struct HBTerm {
  std::vector<HBMono> ms;

  HBTerm();
  HBTerm(const HBTerm&);
  HBTerm(HBTerm&&) noexcept;
  HBTerm& operator=(const HBTerm&);
  HBTerm& operator=(HBTerm&&) noexcept;
  ~HBTerm();

  bool is_zero() const { return ms.empty(); }
  bool is_nat() const;
  uint64_t nat_value() const;
  bool is_successor() const;  // nonzero with trailing Nat monomial
  bool has_uncountable_head() const;
};

enum class HBKind : uint8_t { Nat, WPow, Psi, UPsi, Om };

struct HBMono {
  HBKind kind;
  HBTerm arg;     // WPow/Om exponent, Psi/UPsi argument
  HBTerm ocoeff;  // Om coefficient
  uint64_t n;     // scalar coefficient for the countable kinds
};

HBTerm hb_zero();
HBTerm hb_nat(uint64_t n);
HBTerm hb_omega();
HBTerm hb_Omega();
// w^e * n; e must be countable and pure (no Om/UPsi/Psi inside); e == 0 gives n.
HBTerm hb_wpow(const HBTerm& e, uint64_t n = 1);
// psi(a) * n, with psi(0) = 1.
HBTerm hb_psi(const HBTerm& a, uint64_t n = 1);
// Psi(a); a purely countable collapses to w^2 * a, else a symbolic node.
HBTerm hb_upsi(const HBTerm& a);
// W^e * d; e == 0 gives d, d == 0 gives 0.
HBTerm hb_om(const HBTerm& e, const HBTerm& d);

Cmp cmp_hb(const HBTerm& a, const HBTerm& b);
bool operator==(const HBTerm& a, const HBTerm& b);
inline bool operator!=(const HBTerm& a, const HBTerm& b) { return !(a == b); }
inline bool hb_lt(const HBTerm& a, const HBTerm& b) { return cmp_hb(a, b) == Cmp::LT; }

HBTerm hb_add(const HBTerm& a, const HBTerm& b);
HBTerm hb_add_nat(const HBTerm& a, uint64_t n);
HBTerm hb_nsub(uint64_t m, const HBTerm& a);
HBTerm hb_succ(const HBTerm& a);
HBTerm hb_pred(const HBTerm& a);  // requires is_successor()

// omega * a for countable a.
HBTerm hb_omega_times(const HBTerm& a);
HBTerm hb_omega_power_times(uint64_t p, const HBTerm& a);

// Does any Om (resp. UPsi) node occur hereditarily?
bool hb_contains_Omega(const HBTerm& a);
bool hb_contains_upsi(const HBTerm& a);
// No Om and no UPsi and no Psi anywhere: plain omega-power countable term.
bool hb_pure_countable(const HBTerm& a);

// G-function: G 0 = {}, G(W^a*b+c) = Ga u Gb u Gc, G(psi a) = Ga u {a};
// 1 counts as psi 0 and naturals n as n copies of it.
std::vector<HBTerm> g_set(const HBTerm& t);

// psi a (resp. Psi a) is in psi normal form iff every member of G(arg) is
// below the argument. t must be a single Psi/UPsi monomial with coefficient 1.
bool is_psi_nf(const HBTerm& t);
// Every Psi/UPsi node occurring hereditarily in t passes is_psi_nf.
bool all_psi_nodes_nf(const HBTerm& t);

enum class Cofinality { Zero, Successor, CofOmega, CofUncountable };
Cofinality cofinality(const HBTerm& t);

// Fundamental sequence t[x]. Clauses: (psi(b+1))[x] = psi(b)*x,
// (psi l)[x] = psi(l[x]) at countable cofinality, psi(l_{x,0}) at uncountable
// cofinality with l_{0,0} = l[0], l_{j+1,0} = l[psi l_{j,0}]; the Psi variant
// uses Psi(a+1)[x] = Psi(a) + w*x. Above Omega the usual base-Omega clauses
// apply, with W^(b+1)*(d+1) taking an arbitrary term in the fill slot.
HBTerm fund_hb(const HBTerm& t, uint64_t x);
// Internal form taking an ordinal fill argument (used by the psi iteration).
HBTerm fund_hb_arg(const HBTerm& t, const HBTerm& xi);

// Countable evaluation psi a -> w^a into OrdE0. Throws not_countable_error
// when an Om or UPsi node occurs.
OrdE0 hb_eval_countable(const HBTerm& t);

// Pure countable embedding of a CNF ordinal (inverse of hb_eval_countable on
// plain omega-power terms).
HBTerm hb_from_e0(const OrdE0& a);

// Structural well-formedness: canonical ordering, positive coefficients,
// countable Om coefficients, pure WPow exponents.
bool hb_well_formed(const HBTerm& t);

// ASCII grammar: W for Omega, p(e) for psi, P(e) for Psi, sums with +,
// W^(e)*coeff with a parenthesized coefficient when it is itself a sum,
// w-terms and naturals as in the E0 grammar.
HBTerm parse_hb(const std::string& s);
std::string format_hb(const HBTerm& t);

}  // namespace gs
