#include "goodstein/ord_e0.hpp"

#include <algorithm>
#include <cctype>

namespace gs {

OrdE0::OrdE0() = default;
OrdE0::OrdE0(const OrdE0&) = default;
OrdE0::OrdE0(OrdE0&&) noexcept = default;
OrdE0& OrdE0::operator=(const OrdE0&) = default;
OrdE0& OrdE0::operator=(OrdE0&&) noexcept = default;
OrdE0::~OrdE0() = default;

bool OrdE0::is_finite() const {
  return terms.empty() || (terms.size() == 1 && terms[0].exp.is_zero());
}

uint64_t OrdE0::finite_value() const {
  if (terms.empty()) return 0;
  if (!is_finite()) throw internal_error("finite_value() on infinite ordinal");
  return terms[0].coeff;
}

bool OrdE0::is_successor() const {
  return !terms.empty() && terms.back().exp.is_zero();
}

OrdE0 e0_zero() { return OrdE0{}; }

OrdE0 e0_nat(uint64_t n) {
  OrdE0 r;
  if (n > 0) r.terms.push_back(E0Term{e0_zero(), n});
  return r;
}

OrdE0 e0_omega() { return e0_pow(e0_nat(1)); }

OrdE0 e0_pow(const OrdE0& e, uint64_t c) {
  if (c == 0) return e0_zero();
  OrdE0 r;
  r.terms.push_back(E0Term{e, c});
  return r;
}

Cmp cmp_e0(const OrdE0& a, const OrdE0& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp ce = cmp_e0(a.terms[i].exp, b.terms[i].exp);
    if (ce != Cmp::EQ) return ce;
    if (a.terms[i].coeff != b.terms[i].coeff)
      return cmp_scalar(a.terms[i].coeff, b.terms[i].coeff);
  }
  return cmp_scalar(a.terms.size(), b.terms.size());
}

bool operator==(const OrdE0& a, const OrdE0& b) { return cmp_e0(a, b) == Cmp::EQ; }

OrdE0 add_e0(const OrdE0& a, const OrdE0& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const OrdE0& head = b.terms[0].exp;
  OrdE0 r;
  size_t i = 0;
  while (i < a.terms.size() && cmp_e0(a.terms[i].exp, head) == Cmp::GT)
    r.terms.push_back(a.terms[i++]);
  if (i < a.terms.size() && cmp_e0(a.terms[i].exp, head) == Cmp::EQ) {
    r.terms.push_back(E0Term{head, a.terms[i].coeff + b.terms[0].coeff});
    r.terms.insert(r.terms.end(), b.terms.begin() + 1, b.terms.end());
  } else {
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  }
  return r;
}

OrdE0 add_e0_nat(const OrdE0& a, uint64_t n) { return add_e0(a, e0_nat(n)); }

OrdE0 nsub(uint64_t m, const OrdE0& a) {
  if (!a.is_finite()) return a;
  uint64_t v = a.finite_value();
  return e0_nat(v > m ? v - m : 0);
}

OrdE0 succ_e0(const OrdE0& a) { return add_e0_nat(a, 1); }

OrdE0 pred_e0(const OrdE0& a) {
  if (!a.is_successor()) throw internal_error("pred_e0 on non-successor");
  OrdE0 r = a;
  if (r.terms.back().coeff == 1)
    r.terms.pop_back();
  else
    r.terms.back().coeff -= 1;
  return r;
}

OrdE0 omega_times(const OrdE0& a) { return omega_power_times(1, a); }

OrdE0 omega_power_times(uint64_t p, const OrdE0& a) {
  OrdE0 r;
  OrdE0 pn = e0_nat(p);
  for (const E0Term& t : a.terms)
    r.terms.push_back(E0Term{add_e0(pn, t.exp), t.coeff});
  return r;
}

OrdE0 fund_e0(const OrdE0& a, uint64_t x) {
  if (a.is_zero()) return a;
  if (a.is_successor()) return pred_e0(a);
  OrdE0 r = a;
  E0Term last = r.terms.back();
  r.terms.pop_back();
  if (last.coeff > 1) r.terms.push_back(E0Term{last.exp, last.coeff - 1});
  if (last.exp.is_successor()) {
    // w^(f+1)*(c)[x] -> w^(f+1)*(c-1) + w^f * x
    if (x > 0) r.terms.push_back(E0Term{pred_e0(last.exp), x});
  } else {
    // limit exponent: w^e*(c)[x] -> w^e*(c-1) + w^(e[x])
    r.terms.push_back(E0Term{fund_e0(last.exp, x), 1});
  }
  return r;
}

uint64_t mc_e0(const OrdE0& a) {
  uint64_t m = 0;
  for (const E0Term& t : a.terms) {
    m = std::max(m, t.coeff);
    m = std::max(m, mc_e0(t.exp));
  }
  return m;
}

static uint64_t sat_add(uint64_t a, uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}
static uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

uint64_t ncount(const OrdE0& a) {
  // literal omega occurrences with coefficients expanded as repetition;
  // a bare natural mentions no omega at all
  uint64_t n = 0;
  for (const E0Term& t : a.terms) {
    if (t.exp.is_zero()) continue;
    n = sat_add(n, sat_mul(t.coeff, sat_add(1, ncount(t.exp))));
  }
  return n;
}

LeqLResult leq_l(const OrdE0& a, const OrdE0& b, uint64_t l, uint64_t step_budget) {
  if (l < 1) throw precondition_error("leq_l requires l >= 1");
  OrdE0 cur = a;
  uint64_t steps = 0;
  for (;;) {
    Cmp c = cmp_e0(cur, b);
    if (c == Cmp::EQ) return {LeqLResult::Reached, steps};
    if (c == Cmp::LT) return {LeqLResult::NotReached, steps};
    if (steps >= step_budget) return {LeqLResult::BudgetExhausted, steps};
    if (cur.is_zero()) return {LeqLResult::NotReached, steps};  // 0 stays 0
    cur = fund_e0(cur, l);
    ++steps;
  }
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

struct E0Parser {
  const std::string& s;
  size_t pos = 0;

  explicit E0Parser(const std::string& str) : s(str) {}

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
    if (s[start] == '0' && pos - start > 1)
      throw parse_error(start, "leading zero");
    return v;
  }

  // one term: "w" ["^(" expr ")"] ["*" nat] | nat
  E0Term term() {
    if (eat('w')) {
      OrdE0 e = e0_nat(1);
      if (eat('^')) {
        expect('(');
        size_t estart = pos;
        e = expr();
        expect(')');
        if (e.is_zero()) throw parse_error(estart, "exponent 0 must be a bare natural");
        if (e.is_finite() && e.finite_value() == 1)
          throw parse_error(estart, "exponent 1 is written as plain w");
      }
      uint64_t c = 1;
      if (eat('*')) {
        size_t cstart = pos;
        c = nat();
        if (c < 2) throw parse_error(cstart, "coefficient written only when >= 2");
      }
      return E0Term{e, c};
    }
    uint64_t n = nat();
    if (n == 0) throw parse_error(pos - 1, "0 only allowed as the whole expression");
    return E0Term{e0_zero(), n};
  }

  OrdE0 expr() {
    if (peek() == '0') {
      // bare zero, not followed by more digits
      size_t save = pos;
      ++pos;
      if (isdigit((unsigned char)peek())) throw parse_error(save, "leading zero");
      return e0_zero();
    }
    OrdE0 r;
    r.terms.push_back(term());
    while (eat('+')) {
      E0Term t = term();
      if (cmp_e0(r.terms.back().exp, t.exp) != Cmp::GT)
        throw parse_error(pos, "exponents must strictly decrease");
      r.terms.push_back(t);
    }
    return r;
  }
};

}  // namespace

OrdE0 parse_e0(const std::string& s) {
  E0Parser p(s);
  OrdE0 r = p.expr();
  if (p.pos != s.size()) throw parse_error(p.pos, "trailing input");
  return r;
}

std::string format_e0(const OrdE0& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const E0Term& t : a.terms) {
    if (!first) out += '+';
    first = false;
    if (t.exp.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    if (t.exp.is_finite() && t.exp.finite_value() == 1)
      out += 'w';
    else
      out += "w^(" + format_e0(t.exp) + ")";
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

}  // namespace gs
