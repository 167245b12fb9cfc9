#include "goodstein/normal_form.hpp"

#include <algorithm>

namespace gs {

namespace {

// maximal b with A_index(k,b) <= m, plus that value; index evaluable at 0
std::pair<BudgetedNat, BudgetedNat> search_b(const OrdIx& index, uint32_t k,
                                             const BudgetedNat& m,
                                             AckEvaluator& eng) {
  const uint64_t cap = eng.caps().cap_bits;
  if (index.is_zero()) {
    // A_0(k,b) = b+1: b = m-1 and the value at b is m itself
    return {BudgetedNat::of(m.value() - 1, cap), m};
  }
  if (index.is_finite() && index.finite_value().is_exact() &&
      index.finite_value().value() == 1) {
    // A_1(k,b) = k(1+b): b = floor(m/k) - 1
    BigNat q = m.value() / k;
    if (q == 0) throw internal_error("search_b at index 1 needs m >= k");
    BigNat b = q - 1;
    return {BudgetedNat::of(b, cap), BudgetedNat::of((b + 1) * k, cap)};
  }
  // exponential then binary search with capped, memoized evaluation
  auto le_m = [&](const BigNat& b) {
    BudgetedNat v = eng.ack(index, k, BudgetedNat::of(b, cap));
    return bn_le(v, m);
  };
  if (!le_m(0)) throw internal_error("search_b requires A_index(k,0) <= m");
  BigNat lo = 0, hi = 1;
  while (le_m(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    BigNat mid = (lo + hi) / 2;
    if (le_m(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {BudgetedNat::of(lo, cap), eng.ack(index, k, BudgetedNat::of(lo, cap))};
}

AckNF finish_nf(const OrdIx& index, uint32_t k, const BudgetedNat& m,
                AckEvaluator& eng, bool domain_complete) {
  AckNF nf;
  nf.index = index;
  nf.k = k;
  nf.domain_complete = domain_complete;
  auto [b, vb] = search_b(index, k, m, eng);
  nf.b = b;
  nf.l = bn_sub(m, vb);
  BudgetedNat v0 = eng.ack(index, k, BudgetedNat::of(BigNat(0), eng.caps().cap_bits));
  nf.bracket_lo = bn_le(v0, m);
  BudgetedNat v1 = eng.ack(ix_succ(index), k,
                           BudgetedNat::of(BigNat(0), eng.caps().cap_bits));
  nf.bracket_hi = bn_lt(m, v1);
  if (!nf.bracket_lo || !nf.bracket_hi)
    throw certification_error("normal-form bracket failed to certify");
  return nf;
}

}  // namespace

AckNF knf_fin(const BudgetedNat& m, uint32_t k, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("knf_fin requires k >= 3");
  if (!m.is_exact() || m.is_zero())
    throw precondition_error("knf_fin requires an exact m >= 1");
  const uint64_t cap = eng.caps().cap_bits;
  uint64_t a = 0;
  for (;;) {
    BudgetedNat next = eng.ack_u(a + 1, k, BudgetedNat::of(BigNat(0), cap));
    if (!bn_le(next, m)) break;
    ++a;
    if (a > cap) throw certification_error("index scan exceeded cap");
  }
  return finish_nf(ix_fin_u(a), k, m, eng, true);
}

AckNF knf_ord(const BudgetedNat& m, uint32_t k, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("knf_ord requires k >= 3");
  if (!m.is_exact() || m.is_zero())
    throw precondition_error("knf_ord requires an exact m >= 1");
  AckNF fin = knf_fin(m, k, eng);
  const uint64_t cap = eng.caps().cap_bits;

  OrdIx best = fin.index;
  for (const OrdE0& cand : enumerate_ncount_le(eng.caps().ncap)) {
    if (cand.is_finite()) continue;  // finite indices come from the scan
    OrdIx ix = ordix_from_e0(cand, cap);
    BudgetedNat v0 = eng.ack(ix, k, BudgetedNat::of(BigNat(0), cap));
    if (!bn_le(v0, m)) continue;
    if (cmp_ordix(ix, best) == Cmp::GT) best = ix;
  }
  // N(alpha) <= A_alpha(k,0): when m <= ncap the enumeration is exhaustive
  bool domain_complete = m.value() <= BigNat(eng.caps().ncap);
  return finish_nf(best, k, m, eng, domain_complete);
}

AckTerm hereditary(const BudgetedNat& m, uint32_t k, int part, AckEvaluator& eng) {
  if (!m.is_exact()) throw precondition_error("hereditary requires an exact value");
  if (m.is_zero()) return ack_zero();
  AckNF nf = part == 1 ? knf_fin(m, k, eng) : knf_ord(m, k, eng);
  if (!nf.l.fits_u64())
    throw certification_error("normal-form remainder exceeds machine range");
  OrdIx index = attach_index_terms(nf.index, k, part, eng);
  AckTerm b = hereditary(nf.b, k, part, eng);
  return mk_node(std::move(index), std::move(b), nf.l.as_u64(), nf.b);
}

OrdIx attach_index_terms(const OrdIx& ix, uint32_t k, int part, AckEvaluator& eng) {
  OrdIx r;
  for (const IxTerm& t : ix.terms) {
    IxCoeff c = t.coeff;
    if (!c.term && c.value.is_exact()) c.term = hereditary(c.value, k, part, eng);
    r.terms.push_back(IxTerm{attach_index_terms(t.exp, k, part, eng), std::move(c)});
  }
  return r;
}

KType classify_type(const BudgetedNat& m, uint32_t k, AckEvaluator& eng) {
  if (m.is_zero() || !m.is_exact())
    throw precondition_error("classify_type requires m > 0 exact");
  AckNF nf = knf_fin(m, k, eng);
  bool limit = nf.l.is_zero() && !nf.index.is_zero();
  return limit ? KType::LimitType : KType::SuccessorType;
}

KType classify_type_u(uint64_t m, uint32_t k, AckEvaluator& eng) {
  return classify_type(BudgetedNat::of(BigNat(m), eng.caps().cap_bits), k, eng);
}

BudgetedNat eval_term(const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (!t) return BudgetedNat::of(BigNat(0), eng.caps().cap_bits);
  // the stored b-value is authoritative: components kept verbatim by a base
  // change denote the same number, not the same base-k expression
  BudgetedNat v = eng.ack(t->index, k, t->b_value);
  return bn_add_u(v, t->l);
}

namespace {

// all strictly-decreasing CNF tails using exponents < bound with given budget
void enum_tails(uint64_t budget, const std::vector<OrdE0>& exps, size_t from,
                std::vector<E0Term>& acc, std::vector<OrdE0>& out) {
  {
    OrdE0 r;
    r.terms = acc;
    out.push_back(r);
  }
  for (size_t i = from; i < exps.size(); ++i) {
    uint64_t unit = 1 + ncount(exps[i]);
    for (uint64_t c = 1; c * unit <= budget; ++c) {
      acc.push_back(E0Term{exps[i], c});
      enum_tails(budget - c * unit, exps, i + 1, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<OrdE0> enumerate_ncount_le(uint64_t budget) {
  static std::mutex mu;
  static std::map<uint64_t, std::vector<OrdE0>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(budget);
    if (it != cache.end()) return it->second;
  }
  // exponent pool: every ordinal with ncount <= budget - 1, descending
  std::vector<OrdE0> exps;
  if (budget >= 1) {
    exps = enumerate_ncount_le(budget - 1);
    std::sort(exps.begin(), exps.end(),
              [](const OrdE0& a, const OrdE0& b) { return e0_lt(b, a); });
  }
  std::vector<OrdE0> out;
  std::vector<E0Term> acc;
  enum_tails(budget, exps, 0, acc, out);
  std::sort(out.begin(), out.end(),
            [](const OrdE0& a, const OrdE0& b) { return e0_lt(a, b); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const OrdE0& a, const OrdE0& b) { return a == b; }),
            out.end());
  std::lock_guard<std::mutex> lock(mu);
  cache[budget] = out;
  return out;
}

std::string format_component(const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (!t) return "0";
  BudgetedNat v = eval_term(t, k, eng);
  if (v.is_exact()) return v.value().str();
  return "{" + format_nf(t, k, eng) + "}";
}

std::string format_ordix(const OrdIx& ix, uint32_t k, AckEvaluator& eng) {
  if (ix.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const IxTerm& t : ix.terms) {
    if (!first) out += '+';
    first = false;
    std::string coeff = t.coeff.value.is_exact() ? t.coeff.value.value().str()
                        : t.coeff.term ? "{" + format_nf(t.coeff.term, k, eng) + "}"
                                       : "overflow";
    if (t.exp.is_zero()) {
      out += coeff;
      continue;
    }
    bool exp_is_one = t.exp.is_finite() && t.exp.finite_value().is_exact() &&
                      t.exp.finite_value().value() == 1;
    out += exp_is_one ? "w" : "w^(" + format_ordix(t.exp, k, eng) + ")";
    if (coeff != "1") out += "*" + coeff;
  }
  return out;
}

std::string format_nf(const AckTerm& t, uint32_t k, AckEvaluator& eng) {
  if (!t) return "0";
  std::string ix = t->index.is_finite()
                       ? (t->index.is_zero() ? "0"
                                             : format_ordix(t->index, k, eng))
                       : "[" + format_ordix(t->index, k, eng) + "]";
  std::string bs = t->b_value.is_exact() ? t->b_value.value().str()
                                         : "{" + format_nf(t->b, k, eng) + "}";
  std::string out = "A_" + ix + "(" + std::to_string(k) + "," + bs + ")";
  if (t->l > 0) out += "+" + std::to_string(t->l);
  return out;
}

}  // namespace gs
