#include "lietwist/spinc.hpp"

namespace lietwist {

SpincClassification classify(const SubgroupDatum& sub) {
  SpincClassification c;
  const std::size_t r = sub.datum().rank();
  c.rho_m = rho(sub, RhoKind::M);
  c.is_spin = c.rho_m.is_integral();
  c.character_lattice = subgroup_character_lattice(sub);
  const Weight two_rho_m = c.rho_m.scaled(Rational(2)).integral();
  const Lattice two_x = Lattice::full(r).scaled(2);
  auto x = solve_in_lattice(RationalWeight(two_rho_m), c.character_lattice, two_x);
  c.is_c_spinorial = x.has_value();
  if (x) {
    // Witnesses are 2 rho_M + 2z with z in z0 + X(H); pick the reduced z.
    Weight z0 = RationalWeight(*x - two_rho_m, 2).integral();
    Weight z = c.character_lattice.reduce(z0);
    c.gamma = two_rho_m + z.scaled(2);
    c.torsor_note = "c-spinorial characters form the coset gamma + 2X(H), X(H) of rank " +
                    std::to_string(c.character_lattice.rank());
  } else {
    c.torsor_note = "no c-spinorial character: 2 rho_M is not in X(H) + 2X(T)";
  }
  return c;
}

RationalWeight nu(const SubgroupDatum& sub, const Weight& gamma) {
  if (gamma.size() != sub.datum().rank()) fail(ErrorCode::DimensionMismatch, "gamma has wrong length");
  if (!subgroup_character_lattice(sub).contains(gamma))
    fail(ErrorCode::NotInXH, gamma.str() + " is not a character of H");
  return RationalWeight(gamma, 2) - rho(sub, RhoKind::M);
}

bool is_c_spinorial(const SubgroupDatum& sub, const Weight& gamma) {
  if (gamma.size() != sub.datum().rank() || !subgroup_character_lattice(sub).contains(gamma)) return false;
  return nu(sub, gamma).is_integral();
}

TorusElement euler_class_for_character(const SubgroupDatum& sub, const Weight& gamma) {
  if (!is_c_spinorial(sub, gamma)) fail(ErrorCode::NotCSpinorial, gamma.str() + " is not c-spinorial");
  return multiply(TorusElement::monomial(nu(sub, gamma)),
                  product_one_minus(sub.datum().rank(), sub.complement_positive()));
}

RationalWeight almost_complex_character(const SubgroupDatum& sub, const std::vector<int>& signs) {
  const auto& roots = sub.complement_positive();
  if (signs.size() != roots.size())
    fail(ErrorCode::LengthMismatch, "expected " + std::to_string(roots.size()) + " signs");
  Weight s(sub.datum().rank());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) fail(ErrorCode::LengthMismatch, "signs must be +1 or -1");
    s = s.plus_multiple(signs[k], roots[k]);
  }
  return RationalWeight(s);
}

} // namespace lietwist
