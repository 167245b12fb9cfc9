#pragma once

#include "goodstein/hb_term.hpp"
#include "goodstein/normal_form.hpp"

namespace gs {

enum class MapKind { Psi, Chi, Xi };

// Part-1 assignment of a hereditary term into the ordinals below epsilon_0.
OrdE0 assign_part1(MapKind map, const AckTerm& t, uint32_t k, AckEvaluator& eng);
// Decomposes m via knf_fin first.
OrdE0 assign_part1_m(MapKind map, const BudgetedNat& m, uint32_t k,
                     AckEvaluator& eng);

// Part-2 assignments. psi lands in OT, xi in OT', chi below epsilon_0.
HBTerm assign_part2_psi(const AckTerm& t, uint32_t k, AckEvaluator& eng);
OrdE0 assign_part2_chi(const AckTerm& t, uint32_t k, AckEvaluator& eng);
HBTerm assign_part2_xi(const AckTerm& t, uint32_t k, AckEvaluator& eng);
HBTerm assign_part2_psi_m(const BudgetedNat& m, uint32_t k, AckEvaluator& eng);

// Omega-polynomial lifts of a CNF index.
HBTerm lift_ord_psi(const OrdIx& a, uint32_t k, AckEvaluator& eng);
HBTerm lift_ord_xi(const OrdIx& a, uint32_t k, AckEvaluator& eng);

// Flat assignment for the quadruple variant: w^2*a + w*b + l (part 1) and
// w^index + w*b + l (part 2); ord(0) = 0.
OrdE0 ord_simple(const AckTerm& t, uint32_t k, int part, AckEvaluator& eng);

}  // namespace gs
