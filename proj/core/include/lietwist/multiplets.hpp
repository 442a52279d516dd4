// GKRS multiplets a_w = partial_H(w^-1 a), w in W^H, at X = pt.

#ifndef LIETWIST_MULTIPLETS_HPP_
#define LIETWIST_MULTIPLETS_HPP_

#include <vector>

#include "lietwist/induction.hpp"

namespace lietwist {

struct Multiplet {
  TorusElement source;
  std::vector<std::size_t> reps;  // W_G indices, coset enumeration order
  std::vector<GroupElement> members;
  std::vector<int> signs;
};

// twist(a) must be sigma + [rho_G]; throws BadTwist.
Multiplet multiplet(const InductionProblem& p, const TorusElement& a);
// sum det(w) dim(a_w).
Int alternating_dimension_sum(const Multiplet& m);

struct GkrsComparison {
  TorusElement lhs;  // j_H^*(e(Dirac_M)^*) j_G^* partial_G(a)
  TorusElement rhs;  // j_H^* partial_H(J_M^op a)
  bool equal = false;
};

GkrsComparison gkrs_compare(const InductionProblem& p, const TorusElement& a);
bool gkrs_identity_check(const InductionProblem& p, const TorusElement& a);

} // namespace lietwist

#endif
