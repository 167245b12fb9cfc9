#include "goodstein/ack_term.hpp"

namespace gs {

OrdIx::OrdIx() = default;
OrdIx::OrdIx(const OrdIx&) = default;
OrdIx::OrdIx(OrdIx&&) noexcept = default;
OrdIx& OrdIx::operator=(const OrdIx&) = default;
OrdIx& OrdIx::operator=(OrdIx&&) noexcept = default;
OrdIx::~OrdIx() = default;

bool OrdIx::is_finite() const {
  return terms.empty() || (terms.size() == 1 && terms[0].exp.is_zero());
}

BudgetedNat OrdIx::finite_value() const {
  if (terms.empty()) return BudgetedNat();
  if (!is_finite()) throw internal_error("finite_value() on infinite index");
  return terms[0].coeff.value;
}

bool OrdIx::is_successor() const {
  return !terms.empty() && terms.back().exp.is_zero();
}

AckTerm mk_node(OrdIx index, AckTerm b, uint64_t l, BudgetedNat b_value) {
  return std::make_shared<AckNode>(
      AckNode{std::move(index), std::move(b), l, std::move(b_value)});
}

static uint64_t ix_node_count(const OrdIx& ix) {
  uint64_t n = 0;
  for (const IxTerm& it : ix.terms)
    n += 1 + ix_node_count(it.exp) + node_count(it.coeff.term);
  return n;
}

uint64_t node_count(const AckTerm& t) {
  if (!t) return 0;
  return 1 + node_count(t->b) + ix_node_count(t->index);
}

OrdIx ix_zero() { return OrdIx{}; }

OrdIx ix_fin(const BudgetedNat& value, AckTerm term) {
  OrdIx r;
  if (!value.is_zero()) r.terms.push_back(IxTerm{ix_zero(), IxCoeff{value, term}});
  return r;
}

OrdIx ix_fin_u(uint64_t value) {
  return ix_fin(BudgetedNat::of(BigNat(value), EvalCaps{}.cap_bits));
}

OrdIx ix_pow(const OrdIx& e, IxCoeff c) {
  OrdIx r;
  if (c.value.is_zero()) return r;
  r.terms.push_back(IxTerm{e, std::move(c)});
  return r;
}

OrdIx ix_succ(const OrdIx& a) {
  OrdIx r = a;
  if (r.is_successor()) {
    IxCoeff& c = r.terms.back().coeff;
    c = IxCoeff{bn_add_u(c.value, 1), nullptr};
  } else {
    r.terms.push_back(IxTerm{ix_zero(), IxCoeff{bn_add_u(BudgetedNat(), 1), nullptr}});
  }
  return r;
}

OrdIx ix_pred(const OrdIx& a) {
  if (!a.is_successor()) throw internal_error("ix_pred on non-successor");
  OrdIx r = a;
  IxCoeff& c = r.terms.back().coeff;
  if (c.value.is_exact() && c.value.value() == 1) {
    r.terms.pop_back();
  } else {
    c = IxCoeff{bn_sub(c.value, bn_add_u(BudgetedNat(), 1)), nullptr};
  }
  return r;
}

Cmp cmp_ordix(const OrdIx& a, const OrdIx& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp ce = cmp_ordix(a.terms[i].exp, b.terms[i].exp);
    if (ce != Cmp::EQ) return ce;
    auto cc = bn_cmp(a.terms[i].coeff.value, b.terms[i].coeff.value);
    if (!cc) throw internal_error("incomparable Exceeded coefficients");
    if (*cc != Cmp::EQ) return *cc;
  }
  return cmp_scalar(a.terms.size(), b.terms.size());
}

bool ordix_eq(const OrdIx& a, const OrdIx& b) { return cmp_ordix(a, b) == Cmp::EQ; }

OrdIx fund_ordix(const OrdIx& a, const BudgetedNat& x) {
  if (a.is_zero()) return a;
  if (a.is_successor()) return ix_pred(a);
  OrdIx r = a;
  IxTerm last = r.terms.back();
  r.terms.pop_back();
  bool keep = !(last.coeff.value.is_exact() && last.coeff.value.value() == 1);
  if (keep)
    r.terms.push_back(
        IxTerm{last.exp, IxCoeff{bn_sub(last.coeff.value,
                                        bn_add_u(BudgetedNat(), 1)),
                                 nullptr}});
  if (last.exp.is_successor()) {
    if (!x.is_zero()) r.terms.push_back(IxTerm{ix_pred(last.exp), IxCoeff{x, nullptr}});
  } else {
    r.terms.push_back(IxTerm{fund_ordix(last.exp, x),
                             IxCoeff{bn_add_u(BudgetedNat(), 1), nullptr}});
  }
  return r;
}

static uint64_t sat_add_u(uint64_t a, uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}
static uint64_t sat_mul_u(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

uint64_t ncount_ordix(const OrdIx& a) {
  uint64_t n = 0;
  for (const IxTerm& t : a.terms) {
    if (t.exp.is_zero()) continue;
    uint64_t c = t.coeff.value.is_exceeded() || !t.coeff.value.fits_u64()
                     ? UINT64_MAX
                     : t.coeff.value.as_u64();
    n = sat_add_u(n, sat_mul_u(c, sat_add_u(1, ncount_ordix(t.exp))));
  }
  return n;
}

uint64_t mc_ordix(const OrdIx& a) {
  uint64_t m = 0;
  for (const IxTerm& t : a.terms) {
    uint64_t c = t.coeff.value.is_exceeded() || !t.coeff.value.fits_u64()
                     ? UINT64_MAX
                     : t.coeff.value.as_u64();
    m = std::max(m, c);
    m = std::max(m, mc_ordix(t.exp));
  }
  return m;
}

OrdIx ordix_from_e0(const OrdE0& a, uint64_t cap_bits) {
  OrdIx r;
  for (const E0Term& t : a.terms)
    r.terms.push_back(IxTerm{
        ordix_from_e0(t.exp, cap_bits),
        IxCoeff{BudgetedNat::of(BigNat(t.coeff), cap_bits), nullptr}});
  return r;
}

OrdE0 ordix_to_e0(const OrdIx& a) {
  OrdE0 r;
  for (const IxTerm& t : a.terms) {
    if (!t.coeff.value.fits_u64())
      throw internal_error("index coefficient does not fit a machine word");
    r.terms.push_back(E0Term{ordix_to_e0(t.exp), t.coeff.value.as_u64()});
  }
  return r;
}

std::string ser_ordix(const OrdIx& a) {
  std::string out = "[";
  for (const IxTerm& t : a.terms) {
    out += "w(" + ser_ordix(t.exp) + ")*";
    out += t.coeff.value.is_exceeded() ? "X" : t.coeff.value.value().str();
    out += ";";
  }
  out += "]";
  return out;
}

std::string ser_ackterm(const AckTerm& t) {
  if (!t) return "0";
  std::string out = "N(" + ser_ordix(t->index) + "," + ser_ackterm(t->b) + "," +
                    std::to_string(t->l) + ")";
  return out;
}

}  // namespace gs
