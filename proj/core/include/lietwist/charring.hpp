// Character rings: highest-weight elements of R(G, sigma), Weyl denominators,
// Euler classes, Freudenthal expansion, dimensions and exact division.

#ifndef LIETWIST_CHARRING_HPP_
#define LIETWIST_CHARRING_HPP_

#include <map>
#include <vector>

#include "lietwist/rootdata.hpp"
#include "lietwist/torus.hpp"
#include "lietwist/weyl.hpp"

namespace lietwist {

// Virtual module over a scope (G or H) in the highest-weight basis.
class GroupElement {
public:
  using Map = std::unordered_map<Weight, Int, WeightHash>;

  GroupElement() = default;
  GroupElement(ScopePtr scope, TwistClass twist) : scope_(std::move(scope)), twist_(std::move(twist)) {}
  static GroupElement one(const ScopePtr& scope);
  static GroupElement irreducible(const ScopePtr& scope, const RationalWeight& highest, Int coeff = 1);

  const ScopePtr& scope() const { return scope_; }
  const TwistClass& twist() const { return twist_; }
  std::size_t rank() const { return scope_->rank(); }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  RationalWeight highest_weight(const Weight& offset) const { return twist_.shift() + RationalWeight(offset); }
  // Throws NotDominant.
  void add(const RationalWeight& highest, Int c);
  Int coeff(const RationalWeight& highest) const;
  std::vector<std::pair<RationalWeight, Int>> sorted_terms() const;

  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  GroupElement operator-() const { return scaled(-1); }
  GroupElement scaled(Int k) const;
  friend bool operator==(const GroupElement& a, const GroupElement& b);

  std::string str() const;

private:
  void add_offset(const Weight& offset, Int c);
  ScopePtr scope_;
  TwistClass twist_;
  Map terms_;
};

// d = e^rho prod_{a > 0} (1 - e^-a), twist [rho].
TorusElement weyl_denominator(const RootSystem& scope);
// e^{-rho_M} prod_{a in R_M^+} (1 - e^a), twist [rho_M].
TorusElement euler_class(const SubgroupDatum& sub);
// prod over a list of weights of (1 - e^a).
TorusElement product_one_minus(std::size_t rank, const std::vector<Weight>& weights);

// Full T-character of the irreducible with highest weight lambda (Freudenthal).
TorusElement irreducible_restriction(const RootSystem& scope, const RationalWeight& lambda);
// Multiplicities of the dominant weights only.
std::map<RationalWeight, Int> dominant_multiplicities(const RootSystem& scope, const RationalWeight& lambda);
// j^*: expand a highest-weight element over T.
TorusElement expand(const GroupElement& a);

// Weyl dimension formula, Z-linear.
Int dimension(const GroupElement& a);
Int irreducible_dimension(const RootSystem& scope, const RationalWeight& lambda);

// a = sum c_l J(e^l) over strictly dominant l; throws NotAntiInvariant.
std::map<RationalWeight, Int> anti_invariant_decompose(const RootSystem& scope, const TorusElement& a);
// Collect W-invariant a into highest weights: a = sum c_l j^*[V(l)] (via d * a).
GroupElement collect_invariant(const ScopePtr& scope, const TorusElement& a);

// Exact quotient a / d in the Laurent ring; throws InexactDivision.
TorusElement exact_divide(const TorusElement& a, const TorusElement& d);

} // namespace lietwist

#endif
