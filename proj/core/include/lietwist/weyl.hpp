// Weyl groups as integer matrices, minimal coset representatives W^H,
// dominant-chamber reduction and the antisymmetrizers J_G, J_H, J_M, J_M^op.

#ifndef LIETWIST_WEYL_HPP_
#define LIETWIST_WEYL_HPP_

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lietwist/rootdata.hpp"
#include "lietwist/torus.hpp"

namespace lietwist {

struct WeylElement {
  IntMatrix matrix;
  int length = 0;
  int det = 1;
};

class WeylGroup {
public:
  // Closure of the simple reflections of `scope`; throws OrderCapExceeded once
  // more than `cap` elements appear.
  static std::shared_ptr<const WeylGroup> generate(const ScopePtr& scope, std::uint64_t cap);

  const ScopePtr& scope() const { return scope_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<IntMatrix>& generators() const { return generators_; }
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  std::optional<std::size_t> index_of(const IntMatrix& m) const;

private:
  ScopePtr scope_;
  std::vector<WeylElement> elements_;
  std::vector<IntMatrix> generators_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> index_;
};

using WeylPtr = std::shared_ptr<const WeylGroup>;

// Throws OrderCapExceeded when the product-formula order exceeds the datum's cap.
WeylPtr generate_weyl(const RootDatum& datum);

struct CosetReps {
  std::vector<std::size_t> reps;  // indices into the W_G element list, in its order
  SubgroupPtr subgroup;
};

// W^H = { w in W_G : w(R_H^+) in R_G^+ }.
CosetReps coset_representatives(const WeylGroup& w, const SubgroupPtr& sub);

struct ChamberResult {
  bool regular = false;
  WeylElement w;          // valid when regular
  RationalWeight image;   // w(mu), strictly dominant when regular
};

// Iterated simple-reflection ascent in the given scope.
ChamberResult to_dominant_chamber(const RootSystem& scope, const RationalWeight& mu);
ChamberResult to_dominant_chamber(const RootDatum& datum, const RationalWeight& mu);

enum class Antisymmetrizer { JG, JH, JM, JMop };

// W_G, W_H and W^H for a fixed subgroup.
class WeylContext {
public:
  static std::shared_ptr<const WeylContext> build(const SubgroupPtr& sub);

  const SubgroupPtr& subgroup() const { return sub_; }
  const WeylGroup& group() const { return *wg_; }
  const WeylGroup& sub_group() const { return *wh_; }
  const CosetReps& reps() const { return reps_; }
  std::size_t index() const { return reps_.reps.size(); }

private:
  SubgroupPtr sub_;
  WeylPtr wg_;
  WeylPtr wh_;
  CosetReps reps_;
};

using WeylContextPtr = std::shared_ptr<const WeylContext>;

TorusElement apply_weyl(const WeylElement& w, const TorusElement& a);
TorusElement apply_antisymmetrizer(const WeylContext& ctx, Antisymmetrizer kind, const TorusElement& a);
// Sum det(w) w(a) over a whole group.
TorusElement antisymmetrize(const WeylGroup& w, const TorusElement& a);
// Sum w(a) over a whole group.
TorusElement symmetrize(const WeylGroup& w, const TorusElement& a);
bool is_invariant(const WeylGroup& w, const TorusElement& a);
bool is_anti_invariant(const WeylGroup& w, const TorusElement& a);

} // namespace lietwist

#endif
