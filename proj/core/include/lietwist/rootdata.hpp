// Root data: root systems over a chosen character lattice X(T), closed
// subsystems (maximal-rank connected subgroups H), rho-vectors and pairings.

#ifndef LIETWIST_ROOTDATA_HPP_
#define LIETWIST_ROOTDATA_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lietwist/lattice.hpp"
#include "lietwist/weight.hpp"

namespace lietwist {

struct Limits {
  std::size_t max_rank = 8;
  std::uint64_t max_weyl_order = std::uint64_t{1} << 21;
};

struct SimpleFactor {
  char type = 'A';  // A..G
  int rank = 1;
};

// Product of simple types plus a central torus, e.g. "A1xA1", "B3", "A2xT1".
struct SeriesLabel {
  std::vector<SimpleFactor> factors;
  int central_rank = 0;

  static SeriesLabel parse(const std::string& text);
  std::string str() const;
  std::size_t semisimple_rank() const;
};

// Intermediate lattice between the root and weight lattice of the semisimple
// part. Explicit generators are written in fundamental-weight coordinates.
struct LatticeChoice {
  enum class Kind { Weight, Root, Vector, Generators };
  Kind kind = Kind::Weight;
  std::vector<RationalWeight> generators;

  static LatticeChoice parse(const std::string& text);
  std::string str() const;
};

// A root system (or closed subsystem) realized inside X(T).
class RootSystem {
public:
  RootSystem(std::size_t rank, std::vector<Weight> positive, std::vector<Covector> coroots,
             std::vector<std::size_t> simple);

  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Covector>& positive_coroots() const { return coroots_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }
  std::size_t num_simple() const { return simple_.size(); }
  const Weight& simple_root(std::size_t i) const { return positive_[simple_[i]]; }
  const Covector& simple_coroot(std::size_t i) const { return coroots_[simple_[i]]; }
  std::size_t num_roots() const { return 2 * positive_.size(); }
  const RationalWeight& rho() const { return rho_; }
  // Denominator common to rho: 1 or 2.
  Int rho_den() const { return rho_.den(); }

  bool is_root(const Weight& v) const { return index_.count(v) != 0; }
  bool is_positive(const Weight& root) const;
  // Coroot of +-positive_roots()[i]; throws NotARoot.
  Covector coroot_of(const Weight& root) const;
  std::optional<std::size_t> positive_index(const Weight& root) const;
  std::vector<Weight> all_roots() const;

  Rational pair(const RationalWeight& x, const Weight& root) const;
  bool is_dominant(const RationalWeight& x) const;
  bool is_strictly_dominant(const RationalWeight& x) const;
  // Regular: no root pairing vanishes.
  bool is_regular(const RationalWeight& x) const;

  // Reflection matrix s_beta acting on X(T) coordinates.
  IntMatrix reflection(std::size_t positive_index) const;
  IntMatrix simple_reflection(std::size_t i) const { return reflection(simple_[i]); }

  // (x, y) = sum over positive roots of <x, b^v><y, b^v>; W-invariant.
  Rational form(const RationalWeight& x, const RationalWeight& y) const;

private:
  std::size_t rank_;
  std::vector<Weight> positive_;
  std::vector<Covector> coroots_;
  std::vector<std::size_t> simple_;
  RationalWeight rho_;
  std::unordered_map<Weight, long, WeightHash> index_;  // +-(i+1)
};

using ScopePtr = std::shared_ptr<const RootSystem>;

struct Pi1Report {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  bool torsion_free() const { return torsion.empty(); }
};

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

class RootDatum {
public:
  static DatumPtr build(const SeriesLabel& label, const LatticeChoice& lattice,
                        const Limits& limits = {});
  static DatumPtr build(const std::string& label, const std::string& lattice = "weight",
                        const Limits& limits = {});

  const SeriesLabel& label() const { return label_; }
  const LatticeChoice& lattice_choice() const { return lattice_; }
  const Limits& limits() const { return limits_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return label_.semisimple_rank(); }

  const ScopePtr& roots() const { return roots_; }
  const RootSystem& system() const { return *roots_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  // Columns: the X(T) basis written in (fundamental weights, central) coordinates.
  const IntMatrix& basis_in_fundamental() const { return basis_; }
  RationalWeight to_fundamental(const RationalWeight& x) const;
  RationalWeight from_fundamental(const RationalWeight& f) const;

  // Simple-root coefficients of positive_roots()[i].
  const std::vector<Weight>& simple_coordinates() const { return simple_coords_; }
  // Weight with the given simple-root coefficients.
  Weight root_from_simple_coordinates(const Weight& coeffs) const;

  Lattice root_lattice() const;
  Pi1Report pi1() const;
  std::uint64_t weyl_order_formula() const;
  bool contains_weight(const RationalWeight& x) const { return x.is_integral(); }

private:
  RootDatum() = default;
  SeriesLabel label_;
  LatticeChoice lattice_;
  Limits limits_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  IntMatrix basis_;
  std::vector<std::vector<Rational>> basis_inverse_;
  std::vector<Weight> simple_coords_;
  ScopePtr roots_;
};

class SubgroupDatum;
using SubgroupPtr = std::shared_ptr<const SubgroupDatum>;

// Closed symmetric subsystem R_H of R_G with induced positive system.
class SubgroupDatum {
public:
  static SubgroupPtr from_roots(const DatumPtr& parent, const std::vector<Weight>& generators);
  static SubgroupPtr torus(const DatumPtr& parent) { return from_roots(parent, {}); }
  static SubgroupPtr full(const DatumPtr& parent);

  const DatumPtr& parent() const { return parent_; }
  const RootDatum& datum() const { return *parent_; }
  const ScopePtr& roots() const { return roots_; }
  const RootSystem& system() const { return *roots_; }
  const ScopePtr& group_roots() const { return parent_->roots(); }
  // R_M^+ = R_G^+ \ R_H^+ in canonical order.
  const std::vector<Weight>& complement_positive() const { return complement_; }
  // R_H generated by a subset of the simple roots of G.
  bool is_levi() const { return levi_; }
  bool is_torus() const { return roots_->positive_roots().empty(); }
  bool is_full() const { return complement_.empty(); }

private:
  SubgroupDatum() = default;
  DatumPtr parent_;
  ScopePtr roots_;
  std::vector<Weight> complement_;
  bool levi_ = false;
};

enum class RhoKind { G, H, M };

RationalWeight rho(const RootDatum& datum);
RationalWeight rho(const SubgroupDatum& sub, RhoKind which);

// <x, alpha^v> for alpha in R_G; throws NotARoot.
Rational pair(const RootDatum& datum, const RationalWeight& x, const Weight& alpha);

// X(H) = { x in X(T) : <x, b^v> = 0 for all b in R_H }.
Lattice subgroup_character_lattice(const SubgroupDatum& sub);

// Subgroup descriptors: "T"/"torus", "G"/"full", "levi:0,2" (simple-root indices),
// "roots:0,4" (indices into the canonical positive-root list), or a named preset
// ("a2long" in G2, "so3xso4" in B3, "b4" in F4, "a1xa1" in C2, "levi" = first simple root).
std::vector<Weight> resolve_subgroup(const RootDatum& datum, const std::string& descriptor);
SubgroupPtr make_subgroup(const DatumPtr& datum, const std::string& descriptor);
std::vector<std::string> preset_names(const RootDatum& datum);

} // namespace lietwist

#endif
