// Invariant Spin^c-structures on G/H via c-spinorial characters of H.

#ifndef LIETWIST_SPINC_HPP_
#define LIETWIST_SPINC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lietwist/charring.hpp"
#include "lietwist/lattice.hpp"
#include "lietwist/rootdata.hpp"

namespace lietwist {

struct SpincClassification {
  RationalWeight rho_m;
  bool is_spin = false;
  bool is_c_spinorial = false;
  std::optional<Weight> gamma;  // canonical witness in X(H)
  Lattice character_lattice;    // X(H)
  std::string torsor_note;
};

// Solves 2 rho_M in X(H) + 2 X(T).
SpincClassification classify(const SubgroupDatum& sub);
// nu(gamma) = gamma/2 - rho_M; throws NotInXH.
RationalWeight nu(const SubgroupDatum& sub, const Weight& gamma);
bool is_c_spinorial(const SubgroupDatum& sub, const Weight& gamma);
// e^{nu(gamma)} prod_{R_M^+} (1 - e^a), untwisted; throws NotCSpinorial.
TorusElement euler_class_for_character(const SubgroupDatum& sub, const Weight& gamma);
// sum c_k a_k over R_M^+ in canonical order; throws LengthMismatch.
RationalWeight almost_complex_character(const SubgroupDatum& sub, const std::vector<int>& signs);

} // namespace lietwist

#endif
