#include "goodstein/goodstein.hpp"

namespace gs {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Prime: return "prime";
    case Variant::Second: return "second";
    case Variant::First: return "first";
    case Variant::Iter: return "iter";
  }
  throw internal_error("unreachable");
}

Variant variant_from_name(const std::string& s) {
  if (s == "prime") return Variant::Prime;
  if (s == "second") return Variant::Second;
  if (s == "first") return Variant::First;
  if (s == "iter") return Variant::Iter;
  throw precondition_error("unknown variant: " + s);
}

namespace {

BCOp op_of(Variant v) {
  switch (v) {
    case Variant::Prime: return BCOp::Prime;
    case Variant::Second: return BCOp::Second;
    case Variant::First: return BCOp::First;
    case Variant::Iter: return BCOp::Iter;
  }
  throw internal_error("unreachable");
}

}  // namespace

StepOutcome gstep(const GoodsteinState& s, Variant v, int part, AckEvaluator& eng) {
  if (!s.term) return StepOutcome{false, GoodsteinState{s.l + 1, s.k + 1, nullptr,
                                                        s.value}};
  AckTerm moved = bc(s.term, s.k, op_of(v), eng);
  BudgetedNat mv = eval_term(moved, s.k + 1, eng);
  GoodsteinState next;
  next.l = s.l + 1;
  next.k = s.k + 1;
  if (mv.is_exact()) {
    BigNat nv = mv.value() - 1;
    next.value = BudgetedNat::of(nv, eng.caps().cap_bits);
    next.term = nv == 0 ? ack_zero() : hereditary(next.value, s.k + 1, part, eng);
    if (moved->l > 0 && next.term) {
      // the decremented remainder stays in normal form; cross-check by value
      AckTerm structural = mk_node(moved->index, moved->b, moved->l - 1, moved->b_value);
      BudgetedNat sv = eval_term(structural, s.k + 1, eng);
      if (!sv.is_exact() || sv.value() != nv)
        throw internal_error("structural and numeric step paths disagree");
    }
  } else {
    if (moved->l == 0) return StepOutcome{true, s};  // gap not representable
    next.value = BudgetedNat::exceeded(eng.caps().cap_bits);
    next.term = mk_node(moved->index, moved->b, moved->l - 1, moved->b_value);
  }
  if (node_count(next.term) > eng.caps().node_budget) return StepOutcome{true, s};
  return StepOutcome{false, next};
}

std::string step_ordinal(const AckTerm& t, uint32_t k, Variant v, int part,
                         AckEvaluator& eng) {
  if (part == 1) {
    OrdE0 o = v == Variant::Iter
                  ? ord_simple(t, k, 1, eng)
                  : assign_part1(v == Variant::Prime    ? MapKind::Psi
                                 : v == Variant::Second ? MapKind::Chi
                                                        : MapKind::Xi,
                                 t, k, eng);
    return format_e0(o);
  }
  switch (v) {
    case Variant::Prime: return format_hb(assign_part2_psi(t, k, eng));
    case Variant::Second: return format_e0(assign_part2_chi(t, k, eng));
    case Variant::First: return format_hb(assign_part2_xi(t, k, eng));
    case Variant::Iter: return format_e0(ord_simple(t, k, 2, eng));
  }
  throw internal_error("unreachable");
}

namespace {

// ordinal value in whichever space the variant's paired map uses
struct OrdVal {
  bool is_hb = false;
  OrdE0 e;
  HBTerm h;
};

OrdVal step_ordinal_value(const AckTerm& t, uint32_t k, Variant v, int part,
                          AckEvaluator& eng) {
  OrdVal r;
  if (part == 2 && (v == Variant::Prime || v == Variant::First)) {
    r.is_hb = true;
    r.h = v == Variant::Prime ? assign_part2_psi(t, k, eng)
                              : assign_part2_xi(t, k, eng);
    return r;
  }
  if (part == 1) {
    r.e = v == Variant::Iter
              ? ord_simple(t, k, 1, eng)
              : assign_part1(v == Variant::Prime    ? MapKind::Psi
                             : v == Variant::Second ? MapKind::Chi
                                                    : MapKind::Xi,
                             t, k, eng);
  } else {
    r.e = v == Variant::Second ? assign_part2_chi(t, k, eng)
                               : ord_simple(t, k, 2, eng);
  }
  return r;
}

bool ord_lt(const OrdVal& a, const OrdVal& b) {
  if (a.is_hb != b.is_hb) throw internal_error("mixed ordinal spaces");
  return a.is_hb ? hb_lt(a.h, b.h) : e0_lt(a.e, b.e);
}

std::string format_ordval(const OrdVal& o) {
  return o.is_hb ? format_hb(o.h) : format_e0(o.e);
}

}  // namespace

bool Trace::all_descent_ok() const {
  for (const StepRecord& s : steps)
    if (!s.descent_ok) return false;
  return true;
}

nlohmann::ordered_json Trace::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["variant"] = variant_name(variant);
  j["part"] = part;
  j["steps"] = nlohmann::ordered_json::array();
  for (const StepRecord& s : steps) {
    nlohmann::ordered_json js;
    js["l"] = s.l;
    js["k"] = s.k;
    js["value"] = s.value.is_exact() ? s.value.value().str() : "overflow";
    js["nf"] = {{"index", s.nf_index}, {"b", s.nf_b}, {"l", s.nf_l}};
    js["ordinal"] = s.ordinal;
    js["descent_ok"] = s.descent_ok;
    j["steps"].push_back(js);
  }
  j["status"] = status == Status::Zero      ? "zero"
                : status == Status::MaxSteps ? "max-steps"
                                             : "budget";
  return j;
}

std::string Trace::to_csv() const {
  std::string out = "l,k,value,ordinal,descent_ok\n";
  for (const StepRecord& s : steps) {
    out += std::to_string(s.l) + "," + std::to_string(s.k) + "," +
           (s.value.is_exact() ? s.value.value().str() : "overflow") + "," +
           s.ordinal + "," + (s.descent_ok ? "1" : "0") + "\n";
  }
  return out;
}

Trace run(const AckTerm& seed, Variant v, int part, uint64_t max_steps,
          AckEvaluator& eng) {
  Trace tr;
  tr.seed = format_component(seed, 3, eng);
  tr.variant = v;
  tr.part = part;
  if (!seed) {
    tr.status = Trace::Status::Zero;
    return tr;
  }
  GoodsteinState st{0, 3, seed, eval_term(seed, 3, eng)};
  std::optional<OrdVal> prev;
  for (;;) {
    StepRecord rec;
    rec.l = st.l;
    rec.k = st.k;
    rec.value = st.value;
    rec.term = st.term;
    rec.nf_index = st.term ? format_ordix(st.term->index, st.k, eng) : "0";
    rec.nf_b = st.term ? st.term->b_value.str() : "0";
    rec.nf_l = st.term ? std::to_string(st.term->l) : "0";
    OrdVal cur;
    try {
      cur = step_ordinal_value(st.term, st.k, v, part, eng);
    } catch (const std::exception&) {
      tr.status = Trace::Status::Budget;
      break;
    }
    rec.ordinal = format_ordval(cur);
    rec.descent_ok = !prev || ord_lt(cur, *prev);
    prev = cur;
    tr.steps.push_back(rec);
    if (!st.term) {
      tr.status = Trace::Status::Zero;
      break;
    }
    if (st.l >= max_steps) {
      tr.status = Trace::Status::MaxSteps;
      break;
    }
    StepOutcome out = gstep(st, v, part, eng);
    if (out.budget_stopped) {
      tr.status = Trace::Status::Budget;
      break;
    }
    st = out.next;
  }
  return tr;
}

Trace run_m(const BudgetedNat& m, Variant v, int part, uint64_t max_steps,
            AckEvaluator& eng) {
  AckTerm seed = m.is_zero() ? ack_zero() : hereditary(m, 3, part, eng);
  return run(seed, v, part, max_steps, eng);
}

AckTerm mr_seed(uint64_t r, int part, AckEvaluator& eng) {
  if (r < 1) throw precondition_error("mr_seed requires r >= 1");
  if (part == 1) {
    BudgetedNat m1 = eng.ack_uu(2, 3, 0);  // A_2(3,0)
    AckTerm t = hereditary(m1, 3, 1, eng);
    for (uint64_t i = 1; i < r; ++i) {
      BudgetedNat val = eval_term(t, 3, eng);
      t = mk_node(ix_fin(val, t), ack_zero(), 0, bn_exact(0, eng.caps()));
    }
    return t;
  }
  OrdE0 tower = e0_omega();
  for (uint64_t i = 1; i < r; ++i) tower = e0_pow(tower);
  OrdIx ix = attach_index_terms(ordix_from_e0(tower, eng.caps().cap_bits), 3, 2, eng);
  return mk_node(std::move(ix), ack_zero(), 0, bn_exact(0, eng.caps()));
}

}  // namespace gs
