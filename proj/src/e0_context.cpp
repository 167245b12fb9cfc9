#include "goodstein/e0_context.hpp"

namespace gs {

E0Context hole_context() { return E0Context{}; }

namespace {

void append_merging(std::vector<E0Term>& out, const E0Term& t) {
  if (t.coeff == 0) return;
  if (out.empty()) {
    out.push_back(t);
    return;
  }
  Cmp c = cmp_e0(out.back().exp, t.exp);
  if (c == Cmp::GT) {
    out.push_back(t);
  } else if (c == Cmp::EQ) {
    out.back().coeff += t.coeff;
  } else {
    throw invalid_filler_error("filler breaks exponent ordering");
  }
}

}  // namespace

OrdE0 subst(const E0Context& c, const OrdE0& filler) {
  std::vector<E0Term> mid;
  if (c.sub) {
    OrdE0 e = subst(*c.sub, filler);
    mid.push_back(E0Term{e, 1});
  } else {
    mid = filler.terms;
  }
  OrdE0 r;
  r.terms = c.prefix;
  for (const E0Term& t : mid) append_merging(r.terms, t);
  for (const E0Term& t : c.suffix) append_merging(r.terms, t);
  return r;
}

E0Context truncate(const E0Context& c) {
  E0Context r;
  r.prefix = c.prefix;
  if (c.sub) r.sub = std::make_shared<E0Context>(truncate(*c.sub));
  return r;
}

std::string format_context(const E0Context& c) {
  std::string mid = c.sub ? "w^(" + format_context(*c.sub) + ")" : "[[_]]";
  std::string out;
  OrdE0 pre;
  pre.terms = c.prefix;
  if (!pre.is_zero()) out += format_e0(pre) + "+";
  out += mid;
  OrdE0 suf;
  suf.terms = c.suffix;
  if (!suf.is_zero()) out += "+" + format_e0(suf);
  return out;
}

StarResult star_decompose(const OrdE0& a, const OrdE0& b) {
  if (cmp_e0(a, b) != Cmp::LT)
    throw precondition_error("star_decompose requires a < b");
  if (b == succ_e0(a)) return StarResult{StarResult::SuccessorCase, {}, {}, 0};
  if (e0_lt(a, fund_e0(b, 1))) return StarResult{StarResult::BelowFirst, {}, {}, 0};

  // Neither case: b = P + w^E*c with a = P + w^E*(c-1) + rho, 0 < rho < w^E.
  const E0Term& last = b.terms.back();
  const OrdE0& E = last.exp;
  uint64_t c = last.coeff;

  size_t i = 0;
  for (; i + 1 < b.terms.size(); ++i) {
    if (i >= a.terms.size() || !(a.terms[i].exp == b.terms[i].exp) ||
        a.terms[i].coeff != b.terms[i].coeff)
      throw internal_error("star_decompose: prefix mismatch");
  }
  std::vector<E0Term> prefix(b.terms.begin(), b.terms.end() - 1);
  if (c > 1) {
    if (i >= a.terms.size() || !(a.terms[i].exp == E) || a.terms[i].coeff != c - 1)
      throw internal_error("star_decompose: expected shared w^E block");
    prefix.push_back(E0Term{E, c - 1});
    ++i;
  }
  if (i >= a.terms.size()) throw internal_error("star_decompose: rho empty");
  E0Term head = a.terms[i];
  std::vector<E0Term> xi(a.terms.begin() + i + 1, a.terms.end());

  if (E == succ_e0(head.exp)) {
    StarResult r;
    r.kind = StarResult::ContextCase;
    r.lambda.prefix = prefix;
    r.lambda.suffix = xi;
    r.gamma = head.exp;
    r.r = head.coeff;
    return r;
  }

  // E is a limit above head.exp + 1: recurse into the exponents.
  StarResult sub = star_decompose(head.exp, E);
  if (sub.kind != StarResult::ContextCase)
    throw internal_error("star_decompose: exponent recursion must split");
  StarResult r;
  r.kind = StarResult::ContextCase;
  r.lambda.prefix = prefix;
  r.lambda.sub = std::make_shared<E0Context>(sub.lambda);
  r.lambda.suffix = xi;
  if (head.coeff > 1) r.lambda.suffix.insert(r.lambda.suffix.begin(),
                                             E0Term{head.exp, head.coeff - 1});
  r.gamma = sub.gamma;
  r.r = sub.r;
  return r;
}

LambdaContextResult lambda_context(const OrdE0& a, uint32_t k,
                                   const std::function<KType(uint64_t)>& classify) {
  if (a.is_zero()) throw precondition_error("lambda_context requires a > 0");
  if (a.is_successor() && classify(a.terms.back().coeff) == KType::SuccessorType)
    throw precondition_error(
        "lambda_context: trailing part of successor type is excluded");

  const E0Term& last = a.terms.back();
  std::vector<E0Term> prefix(a.terms.begin(), a.terms.end() - 1);

  if (classify(last.coeff) == KType::LimitType) {  // Case 1
    LambdaContextResult r;
    r.ctx.prefix = prefix;
    r.gamma = last.exp;
    r.p = last.coeff;
    return r;
  }

  // last coefficient of successor type; its exponent is nonzero here
  const OrdE0& en = last.exp;
  if (en.is_successor() &&
      classify(en.terms.back().coeff) == KType::SuccessorType) {  // Case 2.1
    LambdaContextResult r;
    r.ctx.prefix = prefix;
    r.gamma = en;
    r.p = last.coeff;
    return r;
  }

  // Case 2.2: recurse into the exponent.
  LambdaContextResult sub = lambda_context(en, k, classify);
  LambdaContextResult r;
  r.ctx.prefix = prefix;
  if (last.coeff > 1) r.ctx.prefix.push_back(E0Term{en, last.coeff - 1});
  r.ctx.sub = std::make_shared<E0Context>(sub.ctx);
  r.gamma = sub.gamma;
  r.p = sub.p;
  return r;
}

std::vector<Decomposition> enumerate_decompositions(const OrdE0& a) {
  std::vector<Decomposition> out;
  for (size_t j = 0; j < a.terms.size(); ++j) {
    const E0Term& tj = a.terms[j];
    std::vector<E0Term> pre(a.terms.begin(), a.terms.begin() + j);
    std::vector<E0Term> post(a.terms.begin() + j + 1, a.terms.end());
    for (uint64_t r = 1; r <= tj.coeff; ++r) {
      Decomposition d;
      d.ctx.prefix = pre;
      d.ctx.suffix = post;
      if (tj.coeff > r)
        d.ctx.suffix.insert(d.ctx.suffix.begin(), E0Term{tj.exp, tj.coeff - r});
      d.gamma = tj.exp;
      d.r = r;
      out.push_back(std::move(d));
    }
    for (const Decomposition& s : enumerate_decompositions(tj.exp)) {
      Decomposition d;
      d.ctx.prefix = pre;
      d.ctx.sub = std::make_shared<E0Context>(s.ctx);
      d.ctx.suffix = post;
      if (tj.coeff > 1)
        d.ctx.suffix.insert(d.ctx.suffix.begin(), E0Term{tj.exp, tj.coeff - 1});
      d.gamma = s.gamma;
      d.r = s.r;
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace gs
