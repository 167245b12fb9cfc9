#include "goodstein/gen.hpp"

#include <algorithm>

namespace gs {

uint64_t TermGen::pick(uint64_t lo, uint64_t hi) {
  std::uniform_int_distribution<uint64_t> d(lo, hi);
  return d(rng_);
}

OrdE0 TermGen::e0(uint64_t budget, uint64_t depth) {
  if (budget == 0 || pick(0, 5) == 0) return e0_zero();
  uint64_t nterms = pick(1, std::min<uint64_t>(3, budget));
  std::vector<OrdE0> exps;
  for (uint64_t i = 0; i < nterms; ++i)
    exps.push_back(depth == 0 ? e0_nat(pick(0, 2))
                              : e0(std::max<uint64_t>(1, budget / 2) - 1, depth - 1));
  std::sort(exps.begin(), exps.end(),
            [](const OrdE0& a, const OrdE0& b) { return e0_lt(b, a); });
  exps.erase(std::unique(exps.begin(), exps.end(),
                         [](const OrdE0& a, const OrdE0& b) { return a == b; }),
             exps.end());
  OrdE0 r;
  uint64_t used = 0;
  for (const OrdE0& e : exps) {
    uint64_t unit = 1 + ncount(e);
    if (used + unit > budget) continue;
    uint64_t cmax = std::max<uint64_t>(1, (budget - used) / unit);
    uint64_t c = pick(1, std::min<uint64_t>(3, cmax));
    r.terms.push_back(E0Term{e, c});
    used += c * unit;
  }
  return r;
}

HBTerm TermGen::psi_arg(uint64_t depth) {
  // arguments drawn from countable pieces and small Omega polynomials
  switch (depth == 0 ? pick(0, 1) : pick(0, 4)) {
    case 0:
      return hb_nat(pick(1, 3));
    case 1: {
      HBTerm t = hb_from_e0(e0(4, 1));
      return t.is_zero() ? hb_nat(1) : t;
    }
    case 2:
      return hb_Omega();
    case 3: {
      HBTerm arg = psi_arg(depth - 1);
      if (arg.is_zero()) arg = hb_nat(1);
      return hb_om(arg, hb_nat(pick(1, 2)));
    }
    default: {
      HBTerm head = hb_om(hb_nat(pick(1, 2)), hb_nat(pick(1, 2)));
      return hb_add(head, psi_arg(depth - 1));
    }
  }
}

HBTerm TermGen::hb_ot(uint64_t depth) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    HBTerm t;
    uint64_t monos = pick(1, 2);
    for (uint64_t i = 0; i < monos; ++i) {
      switch (pick(0, 2)) {
        case 0:
          t = hb_add(t, hb_psi(psi_arg(depth), pick(1, 2)));
          break;
        case 1: {
          OrdE0 e = e0(3, 1);
          t = hb_add(t, e.is_zero() ? hb_nat(pick(1, 3))
                                    : hb_from_e0(e0_pow(e, pick(1, 2))));
          break;
        }
        default:
          t = hb_add_nat(t, pick(1, 4));
      }
    }
    if (!t.is_zero() && all_psi_nodes_nf(t)) return t;
  }
  return hb_psi(hb_Omega());
}

HBTerm TermGen::hb_otp(uint64_t depth) {
  HBTerm arg = psi_arg(depth);
  if (hb_pure_countable(arg)) arg = hb_add(hb_Omega(), arg);
  HBTerm t = hb_upsi(arg);
  t = hb_add(t, hb_wpow(hb_nat(1), pick(1, 3)));
  t = hb_add_nat(t, pick(0, 3));
  return t;
}

}  // namespace gs
