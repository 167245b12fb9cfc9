#include "doctest.h"

#include "goodstein/assignment.hpp"
#include "goodstein/goodstein.hpp"

using namespace gs;

namespace {
BudgetedNat bn(uint64_t v) { return BudgetedNat::of(BigNat(v), 65536); }
}  // namespace

TEST_CASE("part 1 examples") {
  AckEvaluator eng;
  CHECK(format_e0(assign_part1_m(MapKind::Psi, bn(0), 3, eng)) == "0");
  CHECK(format_e0(assign_part1_m(MapKind::Psi, bn(39), 3, eng)) == "w^(w)");
  CHECK(format_e0(assign_part1_m(MapKind::Psi, bn(4), 3, eng)) == "w+1");
  CHECK(format_e0(assign_part1_m(MapKind::Chi, bn(39), 3, eng)) == "w^(w)");
  CHECK(format_e0(assign_part1_m(MapKind::Xi, bn(39), 3, eng)) == "w^(2)");
  CHECK(format_e0(assign_part1_m(MapKind::Psi, bn(6), 3, eng)) == "w*2");
  CHECK(format_e0(assign_part1_m(MapKind::Psi, bn(12), 3, eng)) == "w^(2)");
  CHECK(format_e0(assign_part1_m(MapKind::Chi, bn(12), 3, eng)) == "w^(2)");
  CHECK(format_e0(assign_part1_m(MapKind::Xi, bn(12), 3, eng)) == "w*4");
}

TEST_CASE("part 1 on a symbolic seed") {
  AckEvaluator eng;
  AckTerm seed = mr_seed(2, 1, eng);  // A_39(3,0)
  CHECK(format_e0(assign_part1(MapKind::Psi, seed, 3, eng)) == "w^(w^(w))");
}

TEST_CASE("part 2 examples") {
  AckEvaluator eng;
  AckTerm aw = mr_seed(1, 2, eng);  // A_w(3,0)
  CHECK(format_hb(assign_part2_psi(aw, 3, eng)) == "p(W)");
  CHECK(format_hb(assign_part2_xi(aw, 3, eng)) == "P(W)");
  AckTerm aww = mr_seed(2, 2, eng);  // A_(w^w)(3,0)
  CHECK(format_e0(assign_part2_chi(aww, 3, eng)) == "w^(w^(w))");
  CHECK(format_hb(assign_part2_psi_m(bn(39), 3, eng)) == "p(w)");
  CHECK(hb_eval_countable(assign_part2_psi_m(bn(39), 3, eng)) ==
        parse_e0("w^(w)"));
}

TEST_CASE("omega polynomial lifts") {
  AckEvaluator eng;
  CHECK(format_hb(lift_ord_psi(ix_zero(), 3, eng)) == "0");
  OrdIx w = attach_index_terms(ordix_from_e0(e0_omega(), 65536), 3, 2, eng);
  CHECK(format_hb(lift_ord_psi(w, 3, eng)) == "W");
  OrdIx ww = attach_index_terms(ordix_from_e0(parse_e0("w^(w)"), 65536), 3, 2, eng);
  CHECK(format_hb(lift_ord_psi(ww, 3, eng)) == "W^(W)");
}

TEST_CASE("ord_simple") {
  AckEvaluator eng;
  CHECK(format_e0(ord_simple(ack_zero(), 3, 1, eng)) == "0");
  AckTerm t4 = hereditary(bn(4), 3, 1, eng);
  CHECK(format_e0(ord_simple(t4, 3, 1, eng)) == "w^(2)+1");
  AckTerm t39 = hereditary(bn(39), 3, 2, eng);
  CHECK(format_e0(ord_simple(t39, 3, 2, eng)) == "w^(2)");
}

TEST_CASE("invariance of the paired maps (Lemma shape)") {
  AckEvaluator eng;
  for (uint32_t k = 3; k <= 4; ++k) {
    for (uint64_t m = 1; m <= 300; ++m) {
      AckTerm t = hereditary(bn(m), k, 1, eng);
      CHECK(assign_part1(MapKind::Psi, t, k, eng) ==
            assign_part1(MapKind::Psi, bc(t, k, BCOp::Prime, eng), k + 1, eng));
      CHECK(assign_part1(MapKind::Chi, t, k, eng) ==
            assign_part1(MapKind::Chi, bc(t, k, BCOp::Second, eng), k + 1, eng));
      CHECK(assign_part1(MapKind::Xi, t, k, eng) ==
            assign_part1(MapKind::Xi, bc(t, k, BCOp::First, eng), k + 1, eng));
    }
  }
}

TEST_CASE("descent of the maps") {
  AckEvaluator eng;
  OrdE0 prev[3];
  for (uint64_t m = 1; m <= 300; ++m) {
    AckTerm t = hereditary(bn(m), 3, 1, eng);
    OrdE0 cur[3] = {assign_part1(MapKind::Psi, t, 3, eng),
                    assign_part1(MapKind::Chi, t, 3, eng),
                    assign_part1(MapKind::Xi, t, 3, eng)};
    for (int i = 0; i < 3; ++i) {
      CHECK(e0_lt(prev[i], cur[i]));
      prev[i] = cur[i];
    }
  }
}

TEST_CASE("part 2 images are normal and coherent with part 1") {
  AckEvaluator eng;
  for (uint64_t m = 1; m <= 150; ++m) {
    AckTerm t2 = hereditary(bn(m), 3, 2, eng);
    HBTerm p2 = assign_part2_psi(t2, 3, eng);
    CHECK(all_psi_nodes_nf(p2));
    CHECK(hb_well_formed(p2));
    CHECK(hb_eval_countable(p2) == assign_part1_m(MapKind::Psi, bn(m), 3, eng));
    CHECK(assign_part2_chi(t2, 3, eng) ==
          assign_part1_m(MapKind::Chi, bn(m), 3, eng));
    CHECK(hb_eval_countable(assign_part2_xi(t2, 3, eng)) ==
          assign_part1_m(MapKind::Xi, bn(m), 3, eng));
  }
}
