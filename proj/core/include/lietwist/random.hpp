// Seeded generators for property tests. Only raw mt19937_64 draws are used so
// sequences are identical on every platform.

#ifndef LIETWIST_RANDOM_HPP_
#define LIETWIST_RANDOM_HPP_

#include <random>

#include "lietwist/charring.hpp"
#include "lietwist/induction.hpp"

namespace lietwist {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi);  // inclusive
  double unit();                // [0, 1)
  std::mt19937_64& engine() { return rng_; }

  // Offsets with |x_i| <= box.
  Weight weight(std::size_t rank, Int box);
  // Random element of the given twist: support <= max_terms, |coeff| <= 9.
  TorusElement torus_element(const TwistClass& twist, Int box, std::size_t max_terms = 12);
  // Dominant weight in the twist class for `scope`: a box draw moved into the
  // chamber. A positive max_dimension rejects draws whose module is larger.
  RationalWeight dominant_weight(const RootSystem& scope, const TwistClass& twist, Int box, Int max_dimension = 0);
  // Virtual highest-weight element with a few small constituents.
  GroupElement group_element(const ScopePtr& scope, const TwistClass& twist, Int box, std::size_t max_terms = 3,
                             Int max_dimension = 0);

private:
  RationalWeight dominant_draw(const RootSystem& scope, const TwistClass& twist, Int box);
  std::mt19937_64 rng_;
};

// Coordinate box used for random weights: 3 rho_G, at least 1.
Int default_box(const RootSystem& g);

} // namespace lietwist

#endif
