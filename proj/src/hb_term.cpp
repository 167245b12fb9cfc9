#include "goodstein/hb_term.hpp"

#include <algorithm>
#include <cctype>

namespace gs {

HBTerm::HBTerm() = default;
HBTerm::HBTerm(const HBTerm&) = default;
HBTerm::HBTerm(HBTerm&&) noexcept = default;
HBTerm& HBTerm::operator=(const HBTerm&) = default;
HBTerm& HBTerm::operator=(HBTerm&&) noexcept = default;
HBTerm::~HBTerm() = default;

bool HBTerm::is_nat() const {
  return ms.empty() || (ms.size() == 1 && ms[0].kind == HBKind::Nat);
}

uint64_t HBTerm::nat_value() const {
  if (ms.empty()) return 0;
  if (!is_nat()) throw internal_error("nat_value() on non-natural term");
  return ms[0].n;
}

bool HBTerm::is_successor() const {
  return !ms.empty() && ms.back().kind == HBKind::Nat;
}

bool HBTerm::has_uncountable_head() const {
  return !ms.empty() && ms[0].kind == HBKind::Om;
}

HBTerm hb_zero() { return HBTerm{}; }

HBTerm hb_nat(uint64_t n) {
  HBTerm t;
  if (n > 0) t.ms.push_back(HBMono{HBKind::Nat, hb_zero(), hb_zero(), n});
  return t;
}

HBTerm hb_omega() { return hb_wpow(hb_nat(1)); }

HBTerm hb_Omega() { return hb_om(hb_nat(1), hb_nat(1)); }

bool hb_contains_Omega(const HBTerm& a) {
  for (const HBMono& m : a.ms) {
    if (m.kind == HBKind::Om) return true;
    if (hb_contains_Omega(m.arg) || hb_contains_Omega(m.ocoeff)) return true;
  }
  return false;
}

bool hb_contains_upsi(const HBTerm& a) {
  for (const HBMono& m : a.ms) {
    if (m.kind == HBKind::UPsi) return true;
    if (hb_contains_upsi(m.arg) || hb_contains_upsi(m.ocoeff)) return true;
  }
  return false;
}

bool hb_pure_countable(const HBTerm& a) {
  for (const HBMono& m : a.ms) {
    if (m.kind == HBKind::Om || m.kind == HBKind::UPsi || m.kind == HBKind::Psi)
      return false;
    if (!hb_pure_countable(m.arg)) return false;
  }
  return true;
}

HBTerm hb_wpow(const HBTerm& e, uint64_t n) {
  if (n == 0) return hb_zero();
  if (e.is_zero()) return hb_nat(n);
  if (!hb_pure_countable(e))
    throw internal_error("w-power exponent must be a plain countable term");
  HBTerm t;
  t.ms.push_back(HBMono{HBKind::WPow, e, hb_zero(), n});
  return t;
}

HBTerm hb_psi(const HBTerm& a, uint64_t n) {
  if (n == 0) return hb_zero();
  if (a.is_zero()) return hb_nat(n);  // psi 0 = 1
  HBTerm t;
  t.ms.push_back(HBMono{HBKind::Psi, a, hb_zero(), n});
  return t;
}

HBTerm hb_upsi(const HBTerm& a) {
  if (a.is_zero()) return hb_zero();  // Psi 0 read as 0
  if (hb_pure_countable(a)) return hb_omega_power_times(2, a);  // Psi a = w^2 * a
  HBTerm t;
  t.ms.push_back(HBMono{HBKind::UPsi, a, hb_zero(), 1});
  return t;
}

HBTerm hb_om(const HBTerm& e, const HBTerm& d) {
  if (e.is_zero()) return d;
  if (d.is_zero()) return hb_zero();
  if (d.has_uncountable_head())
    throw internal_error("Omega-power coefficient must be countable");
  HBTerm t;
  t.ms.push_back(HBMono{HBKind::Om, e, d, 0});
  return t;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

bool mono_large(const HBMono& m) {
  // countable collapses whose value dominates every plain omega power
  return m.kind == HBKind::UPsi ||
         (m.kind == HBKind::Psi && m.arg.has_uncountable_head());
}

Cmp mono_base_cmp(const HBMono& x, const HBMono& y) {
  if (x.kind == HBKind::Om || y.kind == HBKind::Om) {
    if (x.kind == y.kind) return cmp_hb(x.arg, y.arg);
    return x.kind == HBKind::Om ? Cmp::GT : Cmp::LT;
  }
  if (x.kind == HBKind::Nat || y.kind == HBKind::Nat) {
    if (x.kind == y.kind) return Cmp::EQ;
    return x.kind == HBKind::Nat ? Cmp::LT : Cmp::GT;
  }
  bool lx = mono_large(x), ly = mono_large(y);
  if (lx && ly) {
    Cmp c = cmp_hb(x.arg, y.arg);
    if (c != Cmp::EQ) return c;
    if (x.kind == y.kind) return Cmp::EQ;
    return x.kind == HBKind::UPsi ? Cmp::LT : Cmp::GT;
  }
  if (lx != ly) return lx ? Cmp::GT : Cmp::LT;
  // both are omega powers with countable exponents: Psi(a) denotes w^a
  return cmp_hb(x.arg, y.arg);
}

Cmp mono_coeff_cmp(const HBMono& x, const HBMono& y) {
  if (x.kind == HBKind::Om)
    return cmp_hb(x.ocoeff, y.kind == HBKind::Om ? y.ocoeff : hb_zero());
  return cmp_scalar(x.n, y.n);
}

}  // namespace

Cmp cmp_hb(const HBTerm& a, const HBTerm& b) {
  size_t n = std::min(a.ms.size(), b.ms.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp c = mono_base_cmp(a.ms[i], b.ms[i]);
    if (c != Cmp::EQ) return c;
    c = mono_coeff_cmp(a.ms[i], b.ms[i]);
    if (c != Cmp::EQ) return c;
  }
  return cmp_scalar(a.ms.size(), b.ms.size());
}

bool operator==(const HBTerm& a, const HBTerm& b) { return cmp_hb(a, b) == Cmp::EQ; }

HBTerm hb_add(const HBTerm& a, const HBTerm& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  HBTerm r;
  size_t i = 0;
  while (i < a.ms.size() && mono_base_cmp(a.ms[i], b.ms[0]) == Cmp::GT)
    r.ms.push_back(a.ms[i++]);
  if (i < a.ms.size() && mono_base_cmp(a.ms[i], b.ms[0]) == Cmp::EQ) {
    HBMono merged = a.ms[i];
    if (merged.kind == HBKind::Om)
      merged.ocoeff = hb_add(merged.ocoeff, b.ms[0].ocoeff);
    else
      merged.n += b.ms[0].n;
    r.ms.push_back(merged);
    r.ms.insert(r.ms.end(), b.ms.begin() + 1, b.ms.end());
  } else {
    r.ms.insert(r.ms.end(), b.ms.begin(), b.ms.end());
  }
  return r;
}

HBTerm hb_add_nat(const HBTerm& a, uint64_t n) { return hb_add(a, hb_nat(n)); }

HBTerm hb_nsub(uint64_t m, const HBTerm& a) {
  if (!a.is_nat()) return a;
  uint64_t v = a.nat_value();
  return hb_nat(v > m ? v - m : 0);
}

HBTerm hb_succ(const HBTerm& a) { return hb_add_nat(a, 1); }

HBTerm hb_pred(const HBTerm& a) {
  if (!a.is_successor()) throw internal_error("hb_pred on non-successor");
  HBTerm r = a;
  if (r.ms.back().n == 1)
    r.ms.pop_back();
  else
    r.ms.back().n -= 1;
  return r;
}

HBTerm hb_omega_times(const HBTerm& a) {
  HBTerm r;
  for (const HBMono& m : a.ms) {
    switch (m.kind) {
      case HBKind::Nat:
        r = hb_add(r, hb_wpow(hb_nat(1), m.n));
        break;
      case HBKind::WPow:
        r = hb_add(r, hb_wpow(hb_add(hb_nat(1), m.arg), m.n));
        break;
      case HBKind::Psi:
        r = hb_add(r, hb_psi(hb_add(hb_nat(1), m.arg), m.n));
        break;
      default:
        throw internal_error("omega multiple of a non-countable term");
    }
  }
  return r;
}

HBTerm hb_omega_power_times(uint64_t p, const HBTerm& a) {
  HBTerm r = a;
  for (uint64_t i = 0; i < p; ++i) r = hb_omega_times(r);
  return r;
}

// ---------------------------------------------------------------------------
// G-function and psi normal form

namespace {

void g_collect(const HBTerm& t, std::vector<HBTerm>& out) {
  for (const HBMono& m : t.ms) {
    switch (m.kind) {
      case HBKind::Nat:
        out.push_back(hb_zero());  // 1 = psi 0
        break;
      case HBKind::WPow:
        g_collect(m.arg, out);  // w^e read as psi e
        out.push_back(m.arg);
        break;
      case HBKind::Psi:
      case HBKind::UPsi:
        g_collect(m.arg, out);
        out.push_back(m.arg);
        break;
      case HBKind::Om:
        g_collect(m.arg, out);
        g_collect(m.ocoeff, out);
        break;
    }
  }
}

}  // namespace

std::vector<HBTerm> g_set(const HBTerm& t) {
  std::vector<HBTerm> out;
  g_collect(t, out);
  std::sort(out.begin(), out.end(),
            [](const HBTerm& a, const HBTerm& b) { return hb_lt(a, b); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const HBTerm& a, const HBTerm& b) { return a == b; }),
            out.end());
  return out;
}

bool is_psi_nf(const HBTerm& t) {
  if (t.ms.size() != 1 ||
      (t.ms[0].kind != HBKind::Psi && t.ms[0].kind != HBKind::UPsi))
    throw precondition_error("is_psi_nf expects a psi or Psi term");
  const HBTerm& arg = t.ms[0].arg;
  for (const HBTerm& g : g_set(arg))
    if (!hb_lt(g, arg)) return false;
  return true;
}

bool all_psi_nodes_nf(const HBTerm& t) {
  for (const HBMono& m : t.ms) {
    if (m.kind == HBKind::Psi || m.kind == HBKind::UPsi) {
      HBTerm node;
      HBMono single = m;
      single.n = m.kind == HBKind::Psi ? 1 : m.n;
      node.ms.push_back(single);
      if (!is_psi_nf(node)) return false;
    }
    if (!all_psi_nodes_nf(m.arg)) return false;
    if (!all_psi_nodes_nf(m.ocoeff)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cofinality and fundamental sequences

Cofinality cofinality(const HBTerm& t) {
  if (t.is_zero()) return Cofinality::Zero;
  const HBMono& last = t.ms.back();
  switch (last.kind) {
    case HBKind::Nat:
      return Cofinality::Successor;
    case HBKind::WPow:
    case HBKind::Psi:
    case HBKind::UPsi:
      return Cofinality::CofOmega;
    case HBKind::Om: {
      const HBTerm& d = last.ocoeff;
      if (!d.is_successor()) return cofinality(d);  // countable limit coefficient
      const HBTerm& e = last.arg;
      if (e.is_successor()) return Cofinality::CofUncountable;
      return cofinality(e);
    }
  }
  throw internal_error("unreachable");
}

namespace {

uint64_t fill_as_u64(const HBTerm& xi) {
  if (!xi.is_nat())
    throw internal_error("fundamental-sequence argument must be a natural here");
  return xi.nat_value();
}

HBTerm psi_like(HBKind kind, const HBTerm& a, uint64_t n) {
  return kind == HBKind::Psi ? hb_psi(a, n) : hb_upsi(a);
}

// x-th element for a single collapsed monomial psi(a)*c / Psi(a).
HBTerm fund_collapsed(const HBMono& m, const HBTerm& xi) {
  uint64_t x = fill_as_u64(xi);
  const HBTerm& a = m.arg;
  HBTerm kept = m.kind == HBKind::Psi && m.n > 1 ? hb_psi(a, m.n - 1) : hb_zero();
  HBTerm step;
  if (a.is_successor()) {
    if (m.kind == HBKind::Psi) {
      step = hb_psi(hb_pred(a), x);  // (psi(b+1))[x] = psi(b)*x
    } else {
      step = hb_add(hb_upsi(hb_pred(a)), hb_wpow(hb_nat(1), x));  // Psi(a)+w*x
    }
  } else if (cofinality(a) == Cofinality::CofUncountable) {
    HBTerm u = fund_hb_arg(a, hb_nat(0));  // a_{0,0} = a[0]
    for (uint64_t j = 0; j < x; ++j) u = fund_hb_arg(a, psi_like(m.kind, u, 1));
    step = psi_like(m.kind, u, 1);
  } else {
    step = psi_like(m.kind, fund_hb_arg(a, xi), 1);
  }
  return hb_add(kept, step);
}

}  // namespace

HBTerm fund_hb_arg(const HBTerm& t, const HBTerm& xi) {
  if (t.is_zero()) return t;
  if (t.is_successor()) return hb_pred(t);
  HBTerm prefix = t;
  HBMono last = prefix.ms.back();
  prefix.ms.pop_back();

  switch (last.kind) {
    case HBKind::Nat:
      throw internal_error("unreachable");
    case HBKind::WPow: {
      uint64_t x = fill_as_u64(xi);
      HBTerm kept = last.n > 1 ? hb_wpow(last.arg, last.n - 1) : hb_zero();
      HBTerm step;
      if (last.arg.is_successor())
        step = hb_wpow(hb_pred(last.arg), x);
      else
        step = hb_wpow(fund_hb_arg(last.arg, xi), 1);
      return hb_add(prefix, hb_add(kept, step));
    }
    case HBKind::Psi:
    case HBKind::UPsi:
      return hb_add(prefix, fund_collapsed(last, xi));
    case HBKind::Om: {
      const HBTerm& e = last.arg;
      const HBTerm& d = last.ocoeff;
      HBTerm res;
      if (!d.is_successor()) {
        res = hb_om(e, fund_hb_arg(d, xi));  // W^e * d[xi]
      } else {
        HBTerm dp = hb_pred(d);
        if (e.is_successor()) {
          // W^(f+1)*(d'+1)[xi] = W^(f+1)*d' + W^f * xi
          res = hb_add(hb_om(e, dp), hb_om(hb_pred(e), xi));
        } else {
          // limit exponent: W^e*d' + W^(e[xi])
          res = hb_add(hb_om(e, dp), hb_om(fund_hb_arg(e, xi), hb_nat(1)));
        }
      }
      return hb_add(prefix, res);
    }
  }
  throw internal_error("unreachable");
}

HBTerm fund_hb(const HBTerm& t, uint64_t x) { return fund_hb_arg(t, hb_nat(x)); }

// ---------------------------------------------------------------------------
// Countable evaluation

OrdE0 hb_eval_countable(const HBTerm& t) {
  OrdE0 r = e0_zero();
  for (const HBMono& m : t.ms) {
    switch (m.kind) {
      case HBKind::Nat:
        r = add_e0_nat(r, m.n);
        break;
      case HBKind::WPow:
      case HBKind::Psi:
        r = add_e0(r, e0_pow(hb_eval_countable(m.arg), m.n));
        break;
      default:
        throw not_countable_error("term contains Omega or an OT' collapse");
    }
  }
  return r;
}

HBTerm hb_from_e0(const OrdE0& a) {
  HBTerm r;
  for (const E0Term& t : a.terms) r = hb_add(r, hb_wpow(hb_from_e0(t.exp), t.coeff));
  return r;
}

// ---------------------------------------------------------------------------
// Well-formedness

bool hb_well_formed(const HBTerm& t) {
  for (size_t i = 0; i < t.ms.size(); ++i) {
    const HBMono& m = t.ms[i];
    if (i > 0 && mono_base_cmp(t.ms[i - 1], m) != Cmp::GT) return false;
    switch (m.kind) {
      case HBKind::Nat:
        if (m.n == 0) return false;
        break;
      case HBKind::WPow:
        if (m.n == 0 || m.arg.is_zero() || !hb_pure_countable(m.arg)) return false;
        if (!hb_well_formed(m.arg)) return false;
        break;
      case HBKind::Psi:
        if (m.n == 0 || m.arg.is_zero() || !hb_well_formed(m.arg)) return false;
        break;
      case HBKind::UPsi:
        if (m.n != 1 || m.arg.is_zero() || hb_pure_countable(m.arg)) return false;
        if (!hb_well_formed(m.arg)) return false;
        break;
      case HBKind::Om:
        if (m.arg.is_zero() || m.ocoeff.is_zero()) return false;
        if (m.ocoeff.has_uncountable_head()) return false;
        if (!hb_well_formed(m.arg) || !hb_well_formed(m.ocoeff)) return false;
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

struct HBParser {
  const std::string& s;
  size_t pos = 0;

  explicit HBParser(const std::string& str) : s(str) {}

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw parse_error(pos, std::string("expected '") + c + "'");
  }

  uint64_t nat() {
    if (!isdigit((unsigned char)peek())) throw parse_error(pos, "expected digit");
    size_t start = pos;
    uint64_t v = 0;
    while (isdigit((unsigned char)peek())) {
      uint64_t d = (uint64_t)(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) throw parse_error(start, "number too large");
      v = v * 10 + d;
      ++pos;
    }
    if (s[start] == '0' && pos - start > 1) throw parse_error(start, "leading zero");
    return v;
  }

  uint64_t scalar_coeff() {
    size_t start = pos;
    uint64_t c = nat();
    if (c < 2) throw parse_error(start, "coefficient written only when >= 2");
    return c;
  }

  HBTerm paren_expr() {
    expect('(');
    HBTerm e = expr();
    expect(')');
    return e;
  }

  HBTerm mono() {
    size_t start = pos;
    if (eat('W')) {
      HBTerm e = hb_nat(1);
      if (eat('^')) {
        size_t es = pos;
        e = paren_expr();
        if (e.is_nat() && e.nat_value() <= 1)
          throw parse_error(es, "non-canonical Omega exponent");
      }
      HBTerm c = hb_nat(1);
      if (eat('*')) {
        size_t cs = pos;
        if (eat('(')) {
          c = expr();
          expect(')');
          if (c.ms.size() < 2) throw parse_error(cs, "parens only around sums");
        } else {
          c = mono();
        }
        if (c.is_nat() && c.nat_value() <= 1)
          throw parse_error(cs, "coefficient written only when >= 2");
      }
      return hb_om(e, c);
    }
    if (eat('p')) {
      HBTerm a = paren_expr();
      if (a.is_zero()) throw parse_error(start, "p(0) is written as 1");
      uint64_t n = 1;
      if (eat('*')) n = scalar_coeff();
      return hb_psi(a, n);
    }
    if (eat('P')) {
      HBTerm a = paren_expr();
      if (a.is_zero() || hb_pure_countable(a))
        throw parse_error(start, "non-canonical Psi argument");
      return hb_upsi(a);
    }
    if (eat('w')) {
      HBTerm e = hb_nat(1);
      if (eat('^')) {
        size_t es = pos;
        e = paren_expr();
        if (e.is_zero()) throw parse_error(es, "exponent 0 must be a bare natural");
        if (e.is_nat() && e.nat_value() == 1)
          throw parse_error(es, "exponent 1 is written as plain w");
        if (!hb_pure_countable(e))
          throw parse_error(es, "w-power exponent must be a plain countable term");
      }
      uint64_t n = 1;
      if (eat('*')) n = scalar_coeff();
      return hb_wpow(e, n);
    }
    uint64_t n = nat();
    if (n == 0) throw parse_error(start, "0 only allowed as the whole expression");
    return hb_nat(n);
  }

  HBTerm expr() {
    if (peek() == '0') {
      size_t save = pos;
      ++pos;
      if (isdigit((unsigned char)peek())) throw parse_error(save, "leading zero");
      return hb_zero();
    }
    HBTerm r = mono();
    while (eat('+')) {
      size_t p0 = pos;
      HBTerm t = mono();
      if (r.is_zero() || t.is_zero() ||
          mono_base_cmp(r.ms.back(), t.ms[0]) != Cmp::GT)
        throw parse_error(p0, "monomials must strictly decrease");
      r.ms.insert(r.ms.end(), t.ms.begin(), t.ms.end());
    }
    return r;
  }
};

std::string format_mono(const HBMono& m);

std::string format_coeff_term(const HBTerm& c) {
  if (c.ms.size() > 1) return "(" + format_hb(c) + ")";
  return format_hb(c);
}

std::string format_mono(const HBMono& m) {
  std::string out;
  switch (m.kind) {
    case HBKind::Nat:
      return std::to_string(m.n);
    case HBKind::WPow:
      if (m.arg.is_nat() && m.arg.nat_value() == 1)
        out = "w";
      else
        out = "w^(" + format_hb(m.arg) + ")";
      if (m.n != 1) out += "*" + std::to_string(m.n);
      return out;
    case HBKind::Psi:
      out = "p(" + format_hb(m.arg) + ")";
      if (m.n != 1) out += "*" + std::to_string(m.n);
      return out;
    case HBKind::UPsi:
      return "P(" + format_hb(m.arg) + ")";
    case HBKind::Om:
      if (m.arg.is_nat() && m.arg.nat_value() == 1)
        out = "W";
      else
        out = "W^(" + format_hb(m.arg) + ")";
      if (!(m.ocoeff.is_nat() && m.ocoeff.nat_value() == 1))
        out += "*" + format_coeff_term(m.ocoeff);
      return out;
  }
  throw internal_error("unreachable");
}

}  // namespace

HBTerm parse_hb(const std::string& s) {
  HBParser p(s);
  HBTerm r = p.expr();
  if (p.pos != s.size()) throw parse_error(p.pos, "trailing input");
  return r;
}

std::string format_hb(const HBTerm& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const HBMono& m : t.ms) {
    if (!first) out += '+';
    first = false;
    out += format_mono(m);
  }
  return out;
}

}  // namespace gs
