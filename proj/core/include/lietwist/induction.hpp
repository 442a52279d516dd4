// Induction maps: the partial operators, twisted Spin^c-induction i_*, the
// classical (holomorphic / spin / Spin^c(gamma)) variants, Borel-Weil-Bott,
// branching, the duality pairing and the Lefschetz numeric oracle.

#ifndef LIETWIST_INDUCTION_HPP_
#define LIETWIST_INDUCTION_HPP_

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "lietwist/charring.hpp"
#include "lietwist/rootdata.hpp"
#include "lietwist/weyl.hpp"

namespace lietwist {

class InductionProblem {
public:
  static std::shared_ptr<const InductionProblem> build(const SubgroupPtr& sub);
  static std::shared_ptr<const InductionProblem> build(const SubgroupPtr& sub, const TwistClass& sigma);

  const RootDatum& datum() const { return sub_->datum(); }
  const DatumPtr& datum_ptr() const { return sub_->parent(); }
  const SubgroupPtr& sub() const { return sub_; }
  const WeylContext& weyl() const { return *weyl_; }
  const WeylContextPtr& weyl_ptr() const { return weyl_; }
  const ScopePtr& g_scope() const { return sub_->group_roots(); }
  const ScopePtr& h_scope() const { return sub_->roots(); }
  std::size_t rank() const { return datum().rank(); }

  const TwistClass& sigma() const { return sigma_; }
  // sigma + [rho_M], the twist of i_* inputs.
  const TwistClass& input_twist() const { return input_twist_; }
  const RationalWeight& rho_g() const { return rho_g_; }
  const RationalWeight& rho_h() const { return rho_h_; }
  const RationalWeight& rho_m() const { return rho_m_; }
  const TorusElement& d_g() const { return d_g_; }
  const TorusElement& d_h() const { return d_h_; }
  const TorusElement& euler() const { return euler_; }

private:
  SubgroupPtr sub_;
  WeylContextPtr weyl_;
  TwistClass sigma_;
  TwistClass input_twist_;
  RationalWeight rho_g_, rho_h_, rho_m_;
  TorusElement d_g_, d_h_, euler_;
};

using ProblemPtr = std::shared_ptr<const InductionProblem>;

enum class Scope { G, H };

// d_scope^-1 J_scope: monomialwise Borel-Weil-Bott collection; throws BadTwist
// unless twist(a) - [rho_scope] is Weyl-stable.
GroupElement partial(const ScopePtr& scope, const TorusElement& a);
GroupElement partial(const InductionProblem& p, Scope scope, const TorusElement& a);

// i_*(a) = J_M(d_H a) / d_G; a has twist sigma + [rho_M].
GroupElement induce_twisted_spinc(const InductionProblem& p, const TorusElement& a, bool check_invariant = true);

enum class ClassicalKind { Holomorphic, Spin, SpincWith };
GroupElement induce_classical(const InductionProblem& p, ClassicalKind kind, const TorusElement& a,
                              const std::optional<Weight>& gamma = std::nullopt);

// mu H-dominant in sigma + [rho_M]; throws NotHDominant.
GroupElement bwb_irreducible(const InductionProblem& p, const RationalWeight& mu);

// Restriction R(G) -> R(H) in the highest-weight basis.
GroupElement branch(const InductionProblem& p, const GroupElement& a);

struct PairingReport {
  std::vector<TorusElement> basis_a;
  std::vector<TorusElement> basis_b;
  std::vector<std::vector<GroupElement>> gram;
  TorusElement determinant;
  bool is_unit = false;
};

PairingReport pairing_report(const InductionProblem& p, const TwistClass& tau,
                             const std::vector<TorusElement>& basis_a,
                             const std::vector<TorusElement>& basis_b);
// Steinberg basis of R(T) over R(G) (requires the fundamental weights in X(T)).
std::vector<TorusElement> steinberg_basis(const InductionProblem& p);
// Bases for pairing_report with tau = 0 (shift_a = false) or tau = [rho_M].
std::pair<std::vector<TorusElement>, std::vector<TorusElement>> standard_pairing_bases(const InductionProblem& p,
                                                                                       bool tau_is_rho_m);
// Determinant of a square matrix over R(T).
TorusElement determinant(const std::vector<std::vector<TorusElement>>& m, std::size_t rank);

struct LefschetzSample {
  std::vector<double> angles;
  std::complex<double> symbolic;
  std::complex<double> fixed_point;
  double rel_error = 0.0;  // relative to the larger of |symbolic| and the summed term sizes
};

struct LefschetzReport {
  GroupElement symbolic;  // i_D(a) = i_*(a_D a)
  std::vector<LefschetzSample> samples;
  double max_rel_error = 0.0;
  std::size_t resamples = 0;
  static constexpr double kTolerance = 1e-8;
  bool pass() const { return max_rel_error <= kTolerance; }
};

// euler = j_H^* e(D); a has twist making e(D) a of twist sigma + 2[rho_M].
LefschetzReport lefschetz_check(const InductionProblem& p, const TorusElement& euler, const TorusElement& a,
                                int trials, std::uint64_t seed);

// Hodge-de Rham Euler class prod_{R_M^+} (1 - e^a)(1 - e^-a).
TorusElement hodge_de_rham_euler(const InductionProblem& p);

} // namespace lietwist

#endif
