#include "goodstein/base_change.hpp"

namespace gs {

OrdIx bc_ord(const OrdIx& ix, uint32_t k, BCOp op, AckEvaluator& eng) {
  if (op != BCOp::Prime && op != BCOp::First)
    throw precondition_error("bc_ord applies to the prime and first operators");
  OrdIx r;
  for (const IxTerm& t : ix.terms) {
    AckTerm cterm = t.coeff.term;
    if (!cterm && t.coeff.value.is_exact())
      cterm = hereditary(t.coeff.value, k, 2, eng);
    AckTerm changed = bc(cterm, k, op, eng);
    IxCoeff c{eval_term(changed, k + 1, eng), changed};
    r.terms.push_back(IxTerm{bc_ord(t.exp, k, op, eng), std::move(c)});
  }
  return r;
}

AckTerm bc(const AckTerm& t, uint32_t k, BCOp op, AckEvaluator& eng) {
  if (k < 3) throw precondition_error("base change requires k >= 3");
  if (!t) return t;
  switch (op) {
    case BCOp::Prime: {
      AckTerm nb = bc(t->b, k, op, eng);
      return mk_node(bc_ord(t->index, k, op, eng), nb, t->l,
                     eval_term(nb, k + 1, eng));
    }
    case BCOp::Second: {
      // the index stays the same number; its coefficient values remain valid
      AckTerm nb = bc(t->b, k, op, eng);
      return mk_node(t->index, nb, t->l, eval_term(nb, k + 1, eng));
    }
    case BCOp::First:
      // b stays the same number, carried by its stored value
      return mk_node(bc_ord(t->index, k, op, eng), t->b, t->l, t->b_value);
    case BCOp::Iter:
      return t;  // index, b and l all stay; only the base moves
  }
  throw internal_error("unreachable");
}

}  // namespace gs
