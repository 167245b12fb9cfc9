#include "goodstein/assignment.hpp"

namespace gs {

namespace {

uint64_t coeff_u64(const BudgetedNat& v, const char* what) {
  if (!v.fits_u64())
    throw internal_error(std::string(what) + " exceeds the machine coefficient range");
  return v.as_u64();
}

AckTerm index_number_term(const OrdIx& ix, uint32_t k, AckEvaluator& eng) {
  if (!ix.is_finite()) throw precondition_error("part-1 term has an infinite index");
  const IxCoeff& c = ix.terms[0].coeff;
  if (c.term) return c.term;
  if (c.value.is_exact()) return hereditary(c.value, k, 1, eng);
  throw internal_error("index coefficient has neither term nor exact value");
}

AckTerm coeff_term(const IxCoeff& c, uint32_t k, AckEvaluator& eng) {
  if (c.term) return c.term;
  if (c.value.is_exact()) return hereditary(c.value, k, 2, eng);
  throw internal_error("index coefficient has neither term nor exact value");
}

}  // namespace

OrdE0 assign_part1(MapKind map, const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("assignment requires k >= 3");
  if (!t) return e0_zero();
  const OrdIx& ix = t->index;
  if (ix.is_zero()) {
    uint64_t bv = coeff_u64(t->b_value, "below-base value");
    return e0_nat(bv + 1 + t->l);
  }
  BudgetedNat av = ix.is_finite() ? ix.finite_value() : BudgetedNat();
  bool a_is_one = ix.is_finite() && av.is_exact() && av.value() == 1;
  if (a_is_one) {
    if (map == MapKind::Xi) {
      // omega*(1+b) + l with the raw b-argument
      uint64_t bv = coeff_u64(t->b_value, "b-argument");
      return add_e0_nat(e0_pow(e0_nat(1), bv + 1), t->l);
    }
    OrdE0 pb = assign_part1(map, t->b, k, eng);
    return add_e0_nat(omega_times(add_e0_nat(pb, 1)), t->l);
  }
  // index >= 2
  switch (map) {
    case MapKind::Psi: {
      OrdE0 pa = assign_part1(MapKind::Psi, index_number_term(ix, k, eng), k, eng);
      OrdE0 expo = add_e0(e0_omega(), nsub(2, pa));
      OrdE0 pb = assign_part1(MapKind::Psi, t->b, k, eng);
      return add_e0_nat(add_e0(e0_pow(expo), omega_times(pb)), t->l);
    }
    case MapKind::Chi: {
      if (!ix.is_finite()) throw precondition_error("part-1 term has an infinite index");
      uint64_t a = coeff_u64(av, "index value");
      OrdE0 expo = add_e0_nat(e0_omega(), a - 2);
      OrdE0 pb = assign_part1(MapKind::Chi, t->b, k, eng);
      return add_e0_nat(add_e0(e0_pow(expo), omega_times(pb)), t->l);
    }
    case MapKind::Xi: {
      OrdE0 xa = assign_part1(MapKind::Xi, index_number_term(ix, k, eng), k, eng);
      uint64_t bv = coeff_u64(t->b_value, "b-argument");
      OrdE0 head = omega_power_times(2, nsub(1, xa));
      return add_e0_nat(add_e0(head, e0_pow(e0_nat(1), bv)), t->l);
    }
  }
  throw internal_error("unreachable");
}

OrdE0 assign_part1_m(MapKind map, const BudgetedNat& m, uint32_t k,
                     AckEvaluator& eng) {
  if (m.is_zero()) return e0_zero();
  return assign_part1(map, hereditary(m, k, 1, eng), k, eng);
}

HBTerm lift_ord_psi(const OrdIx& a, uint32_t k, AckEvaluator& eng) {
  HBTerm r;
  for (const IxTerm& t : a.terms) {
    HBTerm coeff = assign_part2_psi(coeff_term(t.coeff, k, eng), k, eng);
    r = hb_add(r, hb_om(lift_ord_psi(t.exp, k, eng), coeff));
  }
  return r;
}

HBTerm lift_ord_xi(const OrdIx& a, uint32_t k, AckEvaluator& eng) {
  HBTerm r;
  for (const IxTerm& t : a.terms) {
    HBTerm coeff = assign_part2_xi(coeff_term(t.coeff, k, eng), k, eng);
    r = hb_add(r, hb_om(lift_ord_xi(t.exp, k, eng), coeff));
  }
  return r;
}

HBTerm assign_part2_psi(const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("assignment requires k >= 3");
  if (!t) return hb_zero();
  const OrdIx& ix = t->index;
  if (ix.is_zero()) {
    uint64_t bv = coeff_u64(t->b_value, "below-base value");
    return hb_nat(bv + 1 + t->l);
  }
  bool a_is_one = ix.is_finite() && ix.finite_value().is_exact() &&
                  ix.finite_value().value() == 1;
  if (a_is_one) {
    HBTerm pb = assign_part2_psi(t->b, k, eng);
    return hb_add_nat(hb_omega_times(hb_add_nat(pb, 1)), t->l);
  }
  HBTerm lifted = lift_ord_psi(ix, k, eng);
  HBTerm arg = hb_add(hb_omega(), hb_nsub(2, lifted));
  HBTerm head = hb_psi(arg);
  if (!head.is_nat() && !is_psi_nf(head))
    throw internal_error("psi image fell out of psi normal form");
  HBTerm pb = assign_part2_psi(t->b, k, eng);
  HBTerm res = hb_add_nat(hb_add(head, hb_omega_times(pb)), t->l);
  if (!hb_well_formed(res))
    throw internal_error("psi image fell out of Cantor normal form");
  return res;
}

OrdE0 assign_part2_chi(const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("assignment requires k >= 3");
  if (!t) return e0_zero();
  const OrdIx& ix = t->index;
  if (ix.is_zero()) {
    uint64_t bv = coeff_u64(t->b_value, "below-base value");
    return e0_nat(bv + 1 + t->l);
  }
  bool a_is_one = ix.is_finite() && ix.finite_value().is_exact() &&
                  ix.finite_value().value() == 1;
  if (a_is_one) {
    OrdE0 pb = assign_part2_chi(t->b, k, eng);
    return add_e0_nat(omega_times(add_e0_nat(pb, 1)), t->l);
  }
  OrdE0 alpha = ordix_to_e0(ix);
  OrdE0 expo = add_e0(e0_omega(), nsub(2, alpha));
  OrdE0 pb = assign_part2_chi(t->b, k, eng);
  return add_e0_nat(add_e0(e0_pow(expo), omega_times(pb)), t->l);
}

HBTerm assign_part2_xi(const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("assignment requires k >= 3");
  if (!t) return hb_zero();
  const OrdIx& ix = t->index;
  if (ix.is_zero()) {
    uint64_t bv = coeff_u64(t->b_value, "below-base value");
    return hb_nat(bv + 1 + t->l);
  }
  bool a_is_one = ix.is_finite() && ix.finite_value().is_exact() &&
                  ix.finite_value().value() == 1;
  uint64_t bv = coeff_u64(t->b_value, "b-argument");
  if (a_is_one) {
    return hb_add_nat(hb_wpow(hb_nat(1), bv + 1), t->l);  // omega*(1+b) + l
  }
  HBTerm lifted = lift_ord_xi(ix, k, eng);
  HBTerm head = hb_upsi(hb_nsub(1, lifted));
  if (head.ms.size() == 1 && head.ms[0].kind == HBKind::UPsi && !is_psi_nf(head))
    throw internal_error("xi image fell out of Psi normal form");
  HBTerm res = hb_add_nat(hb_add(head, hb_wpow(hb_nat(1), bv)), t->l);
  if (!hb_well_formed(res))
    throw internal_error("xi image fell out of Cantor normal form");
  return res;
}

HBTerm assign_part2_psi_m(const BudgetedNat& m, uint32_t k, AckEvaluator& eng) {
  if (m.is_zero()) return hb_zero();
  return assign_part2_psi(hereditary(m, k, 2, eng), k, eng);
}

OrdE0 ord_simple(const AckTerm& t, uint32_t k, int part, AckEvaluator& eng) {
  if (!t) return e0_zero();
  uint64_t bv = coeff_u64(t->b_value, "b-argument");
  OrdE0 head;
  if (part == 1) {
    uint64_t av = coeff_u64(t->index.is_zero() ? BudgetedNat()
                                               : t->index.finite_value(),
                            "index value");
    head = e0_pow(e0_nat(2), av);
  } else {
    head = e0_pow(ordix_to_e0(t->index));  // w^0 = 1 absorbs into w*b when b > 0
  }
  return add_e0_nat(add_e0(head, e0_pow(e0_nat(1), bv)), t->l);
}

}  // namespace gs
