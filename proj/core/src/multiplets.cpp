#include "lietwist/multiplets.hpp"

namespace lietwist {

namespace {

void check_source(const InductionProblem& p, const TorusElement& a) {
  if (a.rank() != p.rank()) fail(ErrorCode::DatumMismatch, "torus element does not match the datum");
  const TwistClass want = p.sigma() + TwistClass(p.rho_g());
  if (!a.is_zero() && !(a.twist() == want))
    fail(ErrorCode::BadTwist, "multiplet source must have twist sigma + [rho_G] = " + want.str());
}

} // namespace

Multiplet multiplet(const InductionProblem& p, const TorusElement& a) {
  check_source(p, a);
  Multiplet m;
  m.source = a;
  const WeylGroup& w = p.weyl().group();
  for (std::size_t i : p.weyl().reps().reps) {
    m.reps.push_back(i);
    m.signs.push_back(w[i].det);
    m.members.push_back(partial(p.h_scope(), apply_weyl(w[w.inverse_index(i)], a)));
  }
  return m;
}

Int alternating_dimension_sum(const Multiplet& m) {
  Int s = 0;
  for (std::size_t k = 0; k < m.members.size(); ++k) {
    Int d = dimension(m.members[k]);
    s = add_checked(s, m.signs[k] > 0 ? d : neg_checked(d));
  }
  return s;
}

GkrsComparison gkrs_compare(const InductionProblem& p, const TorusElement& a) {
  check_source(p, a);
  GkrsComparison c;
  c.lhs = multiply(dualize(p.euler()), expand(partial(p.g_scope(), a)));
  c.rhs = expand(partial(p.h_scope(), apply_antisymmetrizer(p.weyl(), Antisymmetrizer::JMop, a)));
  c.equal = c.lhs == c.rhs;
  return c;
}

bool gkrs_identity_check(const InductionProblem& p, const TorusElement& a) { return gkrs_compare(p, a).equal; }

} // namespace lietwist
