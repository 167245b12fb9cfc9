#include "goodstein/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "goodstein/e0_context.hpp"
#include "goodstein/gen.hpp"

namespace gs {

namespace {

struct Ctx {
  const SuiteParams& p;
  AckEvaluator eng;
  Report rep;

  explicit Ctx(const SuiteParams& params) : p(params), eng(params.caps) {}

  BudgetedNat bn(uint64_t v) { return BudgetedNat::of(BigNat(v), p.caps.cap_bits); }

  AckTerm hered(uint64_t m, uint32_t k, int part) {
    return hereditary(bn(m), k, part, eng);
  }

  BudgetedNat vbc(const AckTerm& t, uint32_t k, BCOp op) {
    return eval_term(bc(t, k, op, eng), k + 1, eng);
  }

  void cx(const std::string& input, const std::string& detail) {
    rep.counterexamples.push_back(Counterexample{input, detail});
  }
};

std::string case_id(uint64_t m, uint32_t k, const char* tag) {
  return std::string("m=") + std::to_string(m) + " k=" + std::to_string(k) + " " +
         tag;
}

const BCOp kOps[3] = {BCOp::Prime, BCOp::Second, BCOp::First};
const char* kOpNames[3] = {"prime", "second", "first"};

// ---------------------------------------------------------------------- S1
void suite_bc_monotonicity(Ctx& c) {
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    BudgetedNat prev_img[3];
    bool have_prev = false;
    for (uint64_t m = 1; m <= c.p.m_max; ++m) {
      AckTerm t = c.hered(m, k, 1);
      for (int i = 0; i < 3; ++i) {
        BudgetedNat img = c.vbc(t, k, kOps[i]);
        c.rep.cases++;
        if (img.is_exact()) c.rep.evaluable++;
        if (!bn_le(c.bn(m), img)) c.cx(case_id(m, k, kOpNames[i]), "m > image");
        if (m >= k && !bn_lt(c.bn(m), img))
          c.cx(case_id(m, k, kOpNames[i]), "m >= k but image not larger");
        if (have_prev) {
          auto cmp = bn_cmp(prev_img[i], img);
          if (!cmp)
            c.rep.inconclusive++;
          else if (*cmp != Cmp::LT)
            c.cx(case_id(m, k, kOpNames[i]), "(m-1) image not below m image");
        }
        prev_img[i] = img;
      }
      BudgetedNat iter = c.vbc(t, k, BCOp::Iter);
      c.rep.cases++;
      if (m >= k && !bn_lt(c.bn(m), iter))
        c.cx(case_id(m, k, "iter"), "value did not increase");
      if (m < k && !(iter.is_exact() && iter.value() == m))
        c.cx(case_id(m, k, "iter"), "below-base value changed");
      have_prev = true;
    }
    // A_a(k,b) domination under the operators, off normal form too
    for (uint64_t a = 0; a <= 3; ++a) {
      for (uint64_t b = 0; b <= 4; ++b) {
        BudgetedNat v = c.eng.ack_uu(a, k, b);
        if (!v.is_exact()) {
          c.rep.inconclusive++;
          continue;
        }
        for (int i = 0; i < 3; ++i) {
          BudgetedNat ai = a == 0 ? c.bn(0) : c.vbc(c.hered(a, k, 1), k, kOps[i]);
          BudgetedNat bi = b == 0 ? c.bn(0) : c.vbc(c.hered(b, k, 1), k, kOps[i]);
          if (!ai.is_exact() || !bi.is_exact()) {
            c.rep.inconclusive++;
            continue;
          }
          BudgetedNat rhs = c.eng.ack(ix_fin(ai), k + 1, bi);
          c.rep.cases++;
          if (!bn_le(v, rhs))
            c.cx(case_id(a, k, kOpNames[i]),
                 "A_a(k,b) above its image at b=" + std::to_string(b));
        }
      }
    }
  }
}

// ---------------------------------------------------------------------- S2
void suite_nf_preservation(Ctx& c) {
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    for (uint64_t m = 1; m <= c.p.m_max; ++m) {
      AckTerm t = c.hered(m, k, 1);
      for (int i = 0; i < 3; ++i) {
        AckTerm img = bc(t, k, kOps[i], c.eng);
        BudgetedNat v = eval_term(img, k + 1, c.eng);
        c.rep.cases++;
        if (!v.is_exact()) {
          c.rep.inconclusive++;
          continue;
        }
        c.rep.evaluable++;
        AckNF nf = knf_fin(v, k + 1, c.eng);
        BudgetedNat img_ix = img->index.is_zero() ? c.bn(0)
                                                  : img->index.finite_value();
        BudgetedNat img_b = img->b_value;
        BudgetedNat nf_ix = nf.index.is_zero() ? c.bn(0) : nf.index.finite_value();
        bool same = bn_cmp(img_ix, nf_ix) == Cmp::EQ &&
                    bn_cmp(img_b, nf.b) == Cmp::EQ && nf.l.fits_u64() &&
                    nf.l.as_u64() == img->l;
        if (!same)
          c.cx(case_id(m, k, kOpNames[i]), "image is not the k+1 normal form");
      }
    }
  }
}

// ---------------------------------------------------------------------- S3
void suite_assign_invariance(Ctx& c) {
  const MapKind maps[3] = {MapKind::Psi, MapKind::Chi, MapKind::Xi};
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    for (uint64_t m = 1; m <= c.p.m_max; ++m) {
      AckTerm t = c.hered(m, k, 1);
      for (int i = 0; i < 3; ++i) {
        AckTerm img = bc(t, k, kOps[i], c.eng);
        OrdE0 before = assign_part1(maps[i], t, k, c.eng);
        OrdE0 after = assign_part1(maps[i], img, k + 1, c.eng);
        c.rep.cases++;
        if (!(before == after))
          c.cx(case_id(m, k, kOpNames[i]),
               "part1 " + format_e0(before) + " vs " + format_e0(after));
      }
    }
    uint64_t m2 = std::min<uint64_t>(c.p.m_max, 400);
    for (uint64_t m = 1; m <= m2; ++m) {
      AckTerm t = c.hered(m, k, 2);
      {
        HBTerm before = assign_part2_psi(t, k, c.eng);
        HBTerm after = assign_part2_psi(bc(t, k, BCOp::Prime, c.eng), k + 1, c.eng);
        c.rep.cases++;
        if (!(before == after))
          c.cx(case_id(m, k, "prime"),
               "part2 " + format_hb(before) + " vs " + format_hb(after));
      }
      {
        OrdE0 before = assign_part2_chi(t, k, c.eng);
        OrdE0 after = assign_part2_chi(bc(t, k, BCOp::Second, c.eng), k + 1, c.eng);
        c.rep.cases++;
        if (!(before == after))
          c.cx(case_id(m, k, "second"),
               "part2 " + format_e0(before) + " vs " + format_e0(after));
      }
      {
        HBTerm before = assign_part2_xi(t, k, c.eng);
        HBTerm after = assign_part2_xi(bc(t, k, BCOp::First, c.eng), k + 1, c.eng);
        c.rep.cases++;
        if (!(before == after))
          c.cx(case_id(m, k, "first"),
               "part2 " + format_hb(before) + " vs " + format_hb(after));
      }
    }
  }
}

// ---------------------------------------------------------------------- S4
void suite_assign_descent(Ctx& c) {
  const MapKind maps[3] = {MapKind::Psi, MapKind::Chi, MapKind::Xi};
  const char* names[3] = {"psi", "chi", "xi"};
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    OrdE0 prev1[3];
    OrdE0 prev_ord;
    for (uint64_t m = 1; m <= c.p.m_max; ++m) {
      AckTerm t = c.hered(m, k, 1);
      for (int i = 0; i < 3; ++i) {
        OrdE0 cur = assign_part1(maps[i], t, k, c.eng);
        c.rep.cases++;
        if (!e0_lt(prev1[i], cur))
          c.cx(case_id(m, k, names[i]), "no strict part1 descent at m-1 -> m");
        prev1[i] = cur;
      }
      OrdE0 cur_ord = ord_simple(t, k, 1, c.eng);
      c.rep.cases++;
      if (!e0_lt(prev_ord, cur_ord))
        c.cx(case_id(m, k, "ord"), "no strict ord descent at m-1 -> m");
      prev_ord = cur_ord;
    }
    uint64_t m2 = std::min<uint64_t>(c.p.m_max, 400);
    HBTerm prev_psi, prev_xi;
    OrdE0 prev_chi, prev_ord2;
    for (uint64_t m = 1; m <= m2; ++m) {
      AckTerm t = c.hered(m, k, 2);
      HBTerm cp = assign_part2_psi(t, k, c.eng);
      OrdE0 cc = assign_part2_chi(t, k, c.eng);
      HBTerm cx2 = assign_part2_xi(t, k, c.eng);
      OrdE0 co = ord_simple(t, k, 2, c.eng);
      c.rep.cases += 4;
      if (!hb_lt(prev_psi, cp)) c.cx(case_id(m, k, "psi"), "part2 psi not descending");
      if (!e0_lt(prev_chi, cc)) c.cx(case_id(m, k, "chi"), "part2 chi not descending");
      if (!hb_lt(prev_xi, cx2)) c.cx(case_id(m, k, "xi"), "part2 xi not descending");
      if (!e0_lt(prev_ord2, co)) c.cx(case_id(m, k, "ord"), "part2 ord not descending");
      prev_psi = cp;
      prev_chi = cc;
      prev_xi = cx2;
      prev_ord2 = co;
    }
  }
}

// ---------------------------------------------------------------------- S5
void suite_sandwich(Ctx& c) {
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    for (uint64_t m = 1; m <= c.p.m_max; ++m) {
      AckTerm t1 = c.hered(m, k, 1);
      struct Row {
        MapKind map;
        BCOp op;
        uint64_t step;
        const char* name;
      };
      const Row rows[3] = {{MapKind::Psi, BCOp::Prime, k - 2, "psi/prime"},
                           {MapKind::Chi, BCOp::Second, k - 2, "chi/second"},
                           {MapKind::Xi, BCOp::First, k - 1, "xi/first"}};
      for (const Row& row : rows) {
        BudgetedNat img = c.vbc(t1, k, row.op);
        c.rep.cases++;
        if (!img.is_exact()) {
          c.rep.inconclusive++;
          continue;
        }
        c.rep.evaluable++;
        OrdE0 big = assign_part1(row.map, t1, k, c.eng);
        OrdE0 mid = assign_part1_m(row.map, bn_sub(img, c.bn(1)), k + 1, c.eng);
        OrdE0 low = fund_e0(big, row.step);
        if (!e0_lt(mid, big))
          c.cx(case_id(m, k, row.name), "upper sandwich inequality failed");
        if (!e0_le(low, mid))
          c.cx(case_id(m, k, row.name), "lower sandwich inequality failed");
      }
    }
    uint64_t m2 = std::min<uint64_t>(c.p.m_max, 400);
    for (uint64_t m = 1; m <= m2; ++m) {
      AckTerm t2 = c.hered(m, k, 2);
      {  // psi / prime in OT
        BudgetedNat img = c.vbc(t2, k, BCOp::Prime);
        c.rep.cases++;
        if (img.is_exact()) {
          c.rep.evaluable++;
          HBTerm big = assign_part2_psi(t2, k, c.eng);
          HBTerm mid = assign_part2_psi_m(bn_sub(img, c.bn(1)), k + 1, c.eng);
          HBTerm low = fund_hb(big, k - 2);
          if (!hb_lt(mid, big))
            c.cx(case_id(m, k, "psi2"), "upper sandwich inequality failed");
          if (hb_lt(mid, low))
            c.cx(case_id(m, k, "psi2"), "lower sandwich inequality failed");
        } else {
          c.rep.inconclusive++;
        }
      }
      {  // chi / second below epsilon_0
        BudgetedNat img = c.vbc(t2, k, BCOp::Second);
        c.rep.cases++;
        if (img.is_exact()) {
          c.rep.evaluable++;
          OrdE0 big = assign_part2_chi(t2, k, c.eng);
          BudgetedNat pm = bn_sub(img, c.bn(1));
          OrdE0 mid = pm.is_zero() ? e0_zero()
                                   : assign_part2_chi(
                                         hereditary(pm, k + 1, 2, c.eng), k + 1,
                                         c.eng);
          OrdE0 low = fund_e0(big, k - 2);
          if (!e0_lt(mid, big))
            c.cx(case_id(m, k, "chi2"), "upper sandwich inequality failed");
          if (!e0_le(low, mid))
            c.cx(case_id(m, k, "chi2"), "lower sandwich inequality failed");
        } else {
          c.rep.inconclusive++;
        }
      }
      {  // xi / first in OT'
        BudgetedNat img = c.vbc(t2, k, BCOp::First);
        c.rep.cases++;
        if (img.is_exact()) {
          c.rep.evaluable++;
          HBTerm big = assign_part2_xi(t2, k, c.eng);
          BudgetedNat pm = bn_sub(img, c.bn(1));
          HBTerm mid = pm.is_zero() ? hb_zero()
                                    : assign_part2_xi(
                                          hereditary(pm, k + 1, 2, c.eng), k + 1,
                                          c.eng);
          HBTerm low = fund_hb(big, k - 1);
          if (!hb_lt(mid, big))
            c.cx(case_id(m, k, "xi2"), "upper sandwich inequality failed");
          if (hb_lt(mid, low))
            c.cx(case_id(m, k, "xi2"), "lower sandwich inequality failed");
        } else {
          c.rep.inconclusive++;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------- S6
void suite_bachmann_e0(Ctx& c) {
  TermGen g(c.p.seed);
  for (uint64_t s = 0; s < c.p.samples; ++s) {
    OrdE0 alpha = g.e0(c.p.ncount_max, c.p.depth_max);
    if (alpha.is_zero()) continue;
    uint64_t x = g.pick(1, 4);
    OrdE0 ax = fund_e0(alpha, x);
    std::vector<OrdE0> betas;
    betas.push_back(fund_e0(alpha, x + g.pick(1, 3)));
    betas.push_back(g.e0(c.p.ncount_max, c.p.depth_max));
    for (const OrdE0& beta : betas) {
      if (!(e0_lt(ax, beta) && e0_lt(beta, alpha))) continue;
      c.rep.cases++;
      if (!e0_le(ax, fund_e0(beta, 1)))
        c.cx(format_e0(alpha) + "[" + std::to_string(x) + "] vs " + format_e0(beta),
             "Bachmann property failed");
    }
  }
}

// ---------------------------------------------------------------------- S7
void suite_hb_fundseq_nf(Ctx& c) {
  TermGen g(c.p.seed);
  for (uint64_t s = 0; s < c.p.samples; ++s) {
    HBTerm t = s % 4 == 3 ? g.hb_otp(3) : g.hb_ot(3);
    if (t.is_zero()) continue;
    uint64_t x = g.pick(0, 3);
    HBTerm u = fund_hb(t, x);
    c.rep.cases++;
    if (!all_psi_nodes_nf(u))
      c.cx(format_hb(t) + "[" + std::to_string(x) + "]", "psi normal form lost");
    if (!hb_lt(u, t))
      c.cx(format_hb(t) + "[" + std::to_string(x) + "]", "t[x] not below t");
    if (!u.is_zero()) {
      HBTerm u2 = fund_hb(u, g.pick(0, 3));
      c.rep.cases++;
      if (!all_psi_nodes_nf(u2))
        c.cx(format_hb(u), "psi normal form lost after second step");
    }
    // sampled Bachmann property on these fundamental sequences
    HBTerm v = fund_hb(t, x + g.pick(1, 2));
    if (hb_lt(u, v) && hb_lt(v, t)) {
      c.rep.cases++;
      if (hb_lt(fund_hb(v, 1), u))
        c.cx(format_hb(t), "Bachmann property failed in OT");
    }
  }
}

// ---------------------------------------------------------------------- S8
void suite_star_roundtrip(Ctx& c) {
  TermGen g(c.p.seed);
  for (uint64_t s = 0; s < c.p.samples; ++s) {
    OrdE0 x = g.e0(c.p.ncount_max, c.p.depth_max);
    OrdE0 y = g.e0(c.p.ncount_max, c.p.depth_max);
    Cmp cm = cmp_e0(x, y);
    if (cm == Cmp::EQ) continue;
    const OrdE0& a = cm == Cmp::LT ? x : y;
    const OrdE0& b = cm == Cmp::LT ? y : x;
    c.rep.cases++;
    std::string id = format_e0(a) + " < " + format_e0(b);
    StarResult r = star_decompose(a, b);
    switch (r.kind) {
      case StarResult::SuccessorCase:
        if (!(b == succ_e0(a))) c.cx(id, "successor case mismatch");
        break;
      case StarResult::BelowFirst:
        if (!e0_lt(a, fund_e0(b, 1))) c.cx(id, "below-first case mismatch");
        break;
      case StarResult::ContextCase: {
        OrdE0 back = subst(r.lambda, e0_pow(r.gamma, r.r));
        E0Context tr = truncate(r.lambda);
        OrdE0 bigb = subst(tr, e0_pow(succ_e0(r.gamma), 1));
        OrdE0 bound = subst(tr, e0_pow(r.gamma, r.r + 1));
        if (!(back == a)) c.cx(id, "context does not rebuild a");
        if (!(bigb == b)) c.cx(id, "truncation does not rebuild b");
        if (!e0_lt(a, bound)) c.cx(id, "strict bound a < trunc[w^g*(r+1)] failed");
        if (format_context(truncate(tr)) != format_context(tr))
          c.cx(id, "truncate not idempotent");
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------- S9
BudgetedNat fund_bound(const OrdE0& delta, uint32_t k, uint64_t b, Ctx& c) {
  // A_{delta_{k-1, A_delta(b-1)}}(A_delta(b-1)) with A_delta(-1) = 0
  BudgetedNat x = b == 0 ? c.bn(0)
                         : c.eng.ack(ordix_from_e0(delta, c.p.caps.cap_bits), k,
                                     c.bn(b - 1));
  if (!x.is_exact()) return BudgetedNat::exceeded(c.p.caps.cap_bits);
  if (!delta.is_limit()) throw internal_error("fund_bound expects a limit");
  auto li = c.eng.limit_index(ordix_from_e0(delta, c.p.caps.cap_bits), k - 1, k, x);
  if (li.exceeded) return BudgetedNat::exceeded(c.p.caps.cap_bits);
  return c.eng.ack(li.index, k, x);
}

void suite_maj_max(Ctx& c) {
  std::vector<OrdE0> domain = enumerate_ncount_le(std::min<uint64_t>(c.p.caps.ncap, 6));
  std::vector<OrdE0> small;
  for (uint64_t n = 0; n <= 6; ++n) small.push_back(e0_nat(n));
  small.push_back(e0_omega());
  small.push_back(succ_e0(e0_omega()));
  small.push_back(e0_pow(e0_nat(1), 2));

  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    for (uint64_t b = 0; b <= 2; ++b) {
      for (const OrdE0& alpha : small) {
        for (const OrdE0& beta : small) {
          if (cmp_e0(alpha, beta) != Cmp::LT) continue;
          std::string id = format_e0(alpha) + "<" + format_e0(beta) + " k=" +
                           std::to_string(k) + " b=" + std::to_string(b);
          // Lemma maj: hypothesis over all decompositions of alpha
          bool hyp = true, hyp_conclusive = true;
          for (const Decomposition& d : enumerate_decompositions(alpha)) {
            OrdE0 delta = subst(truncate(d.ctx), e0_pow(succ_e0(d.gamma), 1));
            BudgetedNat bound = fund_bound(delta, k, b, c);
            auto cmp = bn_cmp(c.bn(d.r), bound);
            if (!cmp) {
              hyp_conclusive = false;
            } else if (*cmp != Cmp::LT) {
              hyp = false;
            }
          }
          if (!hyp_conclusive) {
            c.rep.inconclusive++;
            continue;
          }
          if (!hyp) continue;  // premise fails: nothing to check
          c.rep.cases++;
          bool first_ok;
          if (beta == succ_e0(alpha)) {
            first_ok = true;
          } else if (beta.is_successor()) {
            first_ok = e0_le(succ_e0(alpha), pred_e0(beta));
          } else {
            BudgetedNat n = fund_bound(beta, k, b, c);
            if (!n.is_exact() || !n.fits_u64()) {
              c.rep.inconclusive++;
              continue;
            }
            first_ok = e0_le(succ_e0(alpha), fund_e0(beta, n.as_u64()));
          }
          if (!first_ok) c.cx(id, "maj: alpha+1 not below beta's step-down");
          BudgetedNat va =
              c.eng.ack(ordix_from_e0(succ_e0(alpha), c.p.caps.cap_bits), k,
                        c.bn(b));
          BudgetedNat vb =
              c.eng.ack(ordix_from_e0(beta, c.p.caps.cap_bits), k, c.bn(b));
          auto cmp = bn_cmp(va, vb);
          if (!cmp) {
            c.rep.inconclusive++;
          } else {
            c.rep.evaluable++;
            if (*cmp == Cmp::GT) c.cx(id, "maj: A_(alpha+1)(b) > A_beta(b)");
          }
        }

        // Lemma max for alpha against the bounded domain
        BudgetedNat va = c.eng.ack(ordix_from_e0(alpha, c.p.caps.cap_bits), k,
                                   c.bn(b));
        if (!va.is_exact()) {
          c.rep.inconclusive++;
          continue;
        }
        bool premise = true;
        for (const OrdE0& delta : domain) {
          if (cmp_e0(delta, alpha) != Cmp::GT) continue;
          BudgetedNat vd = c.eng.ack(ordix_from_e0(delta, c.p.caps.cap_bits), k,
                                     c.bn(b));
          if (bn_le(vd, va)) {
            premise = false;
            break;
          }
        }
        if (!premise) continue;
        for (const Decomposition& d : enumerate_decompositions(alpha)) {
          OrdE0 betaD = subst(truncate(d.ctx), e0_pow(succ_e0(d.gamma), 1));
          BudgetedNat bound = fund_bound(betaD, k, b, c);
          c.rep.cases++;
          if (bound.is_exact()) c.rep.evaluable++;
          auto cmp = bn_cmp(c.bn(d.r), bound);
          if (cmp && *cmp == Cmp::GT)
            c.cx(format_e0(alpha) + " k=" + std::to_string(k) +
                     " b=" + std::to_string(b),
                 "max: r exceeds the step-down bound at gamma=" +
                     format_e0(d.gamma));
        }
      }
    }
  }
}

// --------------------------------------------------------------------- S10
HBTerm lift_e0_psi(const OrdE0& a, uint32_t k, Ctx& c) {
  OrdIx ix = attach_index_terms(ordix_from_e0(a, c.p.caps.cap_bits), k, 2, c.eng);
  return lift_ord_psi(ix, k, c.eng);
}

HBTerm lift_ctx_fill(const E0Context& ctx, const HBTerm& filler, uint32_t k,
                     Ctx& c) {
  HBTerm mid = ctx.sub ? hb_om(lift_ctx_fill(*ctx.sub, filler, k, c), hb_nat(1))
                       : filler;
  HBTerm r;
  for (const E0Term& t : ctx.prefix)
    r = hb_add(r, hb_om(lift_e0_psi(t.exp, k, c),
                        assign_part2_psi_m(c.bn(t.coeff), k, c.eng)));
  r = hb_add(r, mid);
  for (const E0Term& t : ctx.suffix)
    r = hb_add(r, hb_om(lift_e0_psi(t.exp, k, c),
                        assign_part2_psi_m(c.bn(t.coeff), k, c.eng)));
  return r;
}

void suite_lambda_context(Ctx& c) {
  TermGen g(c.p.seed);
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    auto classify = [&](uint64_t q) { return classify_type_u(q, k, c.eng); };
    uint64_t tried = 0;
    for (uint64_t s = 0; s < c.p.samples && tried < c.p.samples; ++s) {
      OrdE0 alpha = g.e0(6, 3);
      if (alpha.is_zero()) continue;
      if (alpha.is_successor() &&
          classify(alpha.terms.back().coeff) == KType::SuccessorType)
        continue;  // excluded shape
      ++tried;
      c.rep.cases++;
      std::string id = format_e0(alpha) + " k=" + std::to_string(k);
      LambdaContextResult res = lambda_context(alpha, k, classify);
      OrdE0 back = subst(res.ctx, e0_pow(res.gamma, res.p));
      if (!(back == alpha)) {
        c.cx(id, "context fill does not rebuild alpha");
        continue;
      }
      bool p_limit = classify(res.p) == KType::LimitType;
      bool gamma_ok =
          res.gamma.is_successor() &&
          classify(res.gamma.terms.back().coeff) == KType::SuccessorType;
      if (!p_limit && !gamma_ok)
        c.cx(id, "filler shape violates the case split");
      // psi image of the filled context
      HBTerm lhs = lift_e0_psi(alpha, k, c);
      HBTerm fill = hb_om(lift_e0_psi(res.gamma, k, c),
                          assign_part2_psi_m(c.bn(res.p), k, c.eng));
      HBTerm rhs = lift_ctx_fill(res.ctx, fill, k, c);
      if (!(lhs == rhs))
        c.cx(id, "psi image of context fill mismatch: " + format_hb(lhs) +
                     " vs " + format_hb(rhs));
    }
  }
}

// --------------------------------------------------------------------- S11
void suite_descent_trace(Ctx& c) {
  const Variant variants[4] = {Variant::Prime, Variant::Second, Variant::First,
                               Variant::Iter};
  for (int part = 1; part <= 2; ++part) {
    for (Variant v : variants) {
      for (uint64_t m = 0; m <= 6; ++m) {
        Trace tr = run_m(c.bn(m), v, part, 10000, c.eng);
        c.rep.cases++;
        std::string id = std::string("m=") + std::to_string(m) + " " +
                         variant_name(v) + " part=" + std::to_string(part);
        if (tr.status != Trace::Status::Zero) c.cx(id, "did not reach zero");
        if (!tr.all_descent_ok()) c.cx(id, "ordinal descent failed");
      }
    }
  }
  // bounded >=_1 chain along the prime trace from 39 (part 1)
  Trace tr = run_m(c.bn(39), Variant::Prime, 1, 25, c.eng);
  for (size_t i = 0; i + 1 < tr.steps.size(); ++i) {
    OrdE0 o1 = assign_part1(MapKind::Psi, tr.steps[i].term, tr.steps[i].k, c.eng);
    OrdE0 o2 = assign_part1(MapKind::Psi, tr.steps[i + 1].term,
                            tr.steps[i + 1].k, c.eng);
    c.rep.cases++;
    LeqLResult r = leq_l(o2, fund_e0(o1, tr.steps[i].l + 1), 1, 200000);
    if (r.kind == LeqLResult::BudgetExhausted)
      c.rep.inconclusive++;
    else if (r.kind == LeqLResult::NotReached)
      c.cx("39 prime step " + std::to_string(i), ">=_1 chain broken");
  }
  if (!tr.all_descent_ok()) c.cx("39 prime", "descent failed along prefix");
}

// --------------------------------------------------------------------- S12
void suite_monotone_std(Ctx& c) {
  std::vector<OrdE0> domain = enumerate_ncount_le(4);
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    for (const OrdE0& alpha : domain) {
      OrdIx ix = ordix_from_e0(alpha, c.p.caps.cap_bits);
      for (uint64_t b = 0; b <= 2; ++b) {
        std::string id = format_e0(alpha) + " k=" + std::to_string(k) +
                         " b=" + std::to_string(b);
        BudgetedNat v = c.eng.ack(ix, k, c.bn(b));
        BudgetedNat v1 = c.eng.ack(ix, k, c.bn(b + 1));
        c.rep.cases++;
        auto cmp = bn_cmp(v, v1);
        if (!cmp)
          c.rep.inconclusive++;
        else {
          c.rep.evaluable++;
          if (*cmp != Cmp::LT) c.cx(id, "A not strictly monotone in b");
        }
        // mc bound, size bound, growth floor: Exceeded is conclusively large
        if (v.is_exact()) {
          if (BigNat(mc_e0(alpha)) >= v.value()) c.cx(id, "mc(alpha) >= A_alpha(b)");
          if (v.value() < BigNat(ncount(alpha)) + b) c.cx(id, "A < N(alpha)+b");
          if (!alpha.is_zero() && v.value() <= 2 * b) c.cx(id, "A <= 2b");
        }
        // step-down monotonicity along [l]
        if (alpha.is_limit()) {
          for (uint64_t l = 1; l <= 2; ++l) {
            OrdE0 al = fund_e0(alpha, l);
            for (const OrdE0& beta : domain) {
              if (!(e0_lt(al, beta) && e0_lt(beta, alpha))) continue;
              BudgetedNat va = c.eng.ack(ordix_from_e0(al, c.p.caps.cap_bits), k,
                                         c.bn(b));
              BudgetedNat vb = c.eng.ack(ordix_from_e0(beta, c.p.caps.cap_bits),
                                         k, c.bn(b));
              c.rep.cases++;
              auto cab = bn_cmp(va, vb);
              if (!cab)
                c.rep.inconclusive++;
              else {
                c.rep.evaluable++;
                if (*cab != Cmp::LT) c.cx(id, "step-down domination failed");
              }
            }
          }
        }
        // alpha <= beta along [l]-chains gives A_alpha(b) <= A_beta(b), b >= l
        if (b >= 1 && !alpha.is_zero()) {
          OrdE0 down = alpha;
          for (int steps = 0; steps < 3 && !down.is_zero(); ++steps) {
            down = fund_e0(down, b);
            BudgetedNat vd = c.eng.ack(ordix_from_e0(down, c.p.caps.cap_bits), k,
                                       c.bn(b));
            c.rep.cases++;
            auto cd = bn_cmp(vd, v);
            if (!cd)
              c.rep.inconclusive++;
            else {
              c.rep.evaluable++;
              if (*cd == Cmp::GT) c.cx(id, "chain monotonicity failed");
            }
          }
        }
        // order bound: alpha < beta and mc(alpha) <= b
        for (const OrdE0& beta : domain) {
          if (cmp_e0(alpha, beta) != Cmp::LT || mc_e0(alpha) > b) continue;
          BudgetedNat vb = c.eng.ack(ordix_from_e0(beta, c.p.caps.cap_bits), k,
                                     c.bn(b));
          c.rep.cases++;
          auto cab = bn_cmp(v, vb);
          if (!cab)
            c.rep.inconclusive++;
          else {
            c.rep.evaluable++;
            if (*cab == Cmp::GT) c.cx(id, "order bound failed");
          }
        }
      }
    }
  }
  // memoized and raw evaluation agree
  AckEvaluator raw(c.p.caps);
  raw.set_use_memo(false);
  for (uint64_t a = 0; a <= 3; ++a) {
    for (uint64_t b = 0; b <= 3; ++b) {
      BudgetedNat x = c.eng.ack_uu(a, 3, b);
      BudgetedNat y = raw.ack_uu(a, 3, b);
      c.rep.cases++;
      bool same = x.is_exceeded() == y.is_exceeded() &&
                  (x.is_exceeded() || x.value() == y.value());
      if (!same)
        c.cx("a=" + std::to_string(a) + " b=" + std::to_string(b),
             "memoized and raw evaluation disagree");
    }
  }
}

// --------------------------------------------------------------------- S13
void suite_part1_part2(Ctx& c) {
  uint64_t m2 = std::min<uint64_t>(c.p.m_max, 300);
  for (uint32_t k = c.p.k_min; k <= c.p.k_max; ++k) {
    for (uint64_t m = 1; m <= m2; ++m) {
      std::string id = case_id(m, k, "");
      AckNF f = knf_fin(c.bn(m), k, c.eng);
      AckNF o = knf_ord(c.bn(m), k, c.eng);
      c.rep.cases++;
      bool same = cmp_ordix(f.index, o.index) == Cmp::EQ &&
                  bn_cmp(f.b, o.b) == Cmp::EQ && bn_cmp(f.l, o.l) == Cmp::EQ;
      if (!same) c.cx(id, "knf_ord disagrees with knf_fin");
      AckTerm t1 = c.hered(m, k, 1);
      AckTerm t2 = c.hered(m, k, 2);
      c.rep.cases++;
      OrdE0 p1 = assign_part1(MapKind::Psi, t1, k, c.eng);
      OrdE0 p2 = hb_eval_countable(assign_part2_psi(t2, k, c.eng));
      if (!(p1 == p2)) c.cx(id, "psi images disagree across parts");
      c.rep.cases++;
      OrdE0 c1 = assign_part1(MapKind::Chi, t1, k, c.eng);
      OrdE0 c2 = assign_part2_chi(t2, k, c.eng);
      if (!(c1 == c2)) c.cx(id, "chi images disagree across parts");
      c.rep.cases++;
      OrdE0 x1 = assign_part1(MapKind::Xi, t1, k, c.eng);
      OrdE0 x2 = hb_eval_countable(assign_part2_xi(t2, k, c.eng));
      if (!(x1 == x2)) c.cx(id, "xi images disagree across parts");
    }
  }
}

}  // namespace

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases"] = cases;
  j["evaluable"] = evaluable;
  j["inconclusive"] = inconclusive;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const Counterexample& c : counterexamples)
    j["counterexamples"].push_back({{"input", c.input}, {"detail", c.detail}});
  return j;
}

std::vector<std::string> suite_ids() {
  return {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11",
          "S12", "S13"};
}

Report run_suite(const std::string& id, const SuiteParams& p) {
  Ctx c(p);
  c.rep.suite = id;
  if (id == "S1")
    suite_bc_monotonicity(c);
  else if (id == "S2")
    suite_nf_preservation(c);
  else if (id == "S3")
    suite_assign_invariance(c);
  else if (id == "S4")
    suite_assign_descent(c);
  else if (id == "S5")
    suite_sandwich(c);
  else if (id == "S6")
    suite_bachmann_e0(c);
  else if (id == "S7")
    suite_hb_fundseq_nf(c);
  else if (id == "S8")
    suite_star_roundtrip(c);
  else if (id == "S9")
    suite_maj_max(c);
  else if (id == "S10")
    suite_lambda_context(c);
  else if (id == "S11")
    suite_descent_trace(c);
  else if (id == "S12")
    suite_monotone_std(c);
  else if (id == "S13")
    suite_part1_part2(c);
  else
    throw precondition_error("unknown suite id: " + id);
  std::sort(c.rep.counterexamples.begin(), c.rep.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return a.input != b.input ? a.input < b.input : a.detail < b.detail;
            });
  return c.rep;
}

}  // namespace gs
