#include "lietwist/induction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <unordered_map>

namespace lietwist {

ProblemPtr InductionProblem::build(const SubgroupPtr& sub) {
  return build(sub, TwistClass(sub->datum().rank()));
}

ProblemPtr InductionProblem::build(const SubgroupPtr& sub, const TwistClass& sigma) {
  if (sigma.rank() != sub->datum().rank()) fail(ErrorCode::DimensionMismatch, "twist has wrong length");
  auto p = std::make_shared<InductionProblem>();
  p->sub_ = sub;
  p->weyl_ = WeylContext::build(sub);
  p->sigma_ = sigma;
  p->rho_g_ = rho(*sub, RhoKind::G);
  p->rho_h_ = rho(*sub, RhoKind::H);
  p->rho_m_ = rho(*sub, RhoKind::M);
  p->input_twist_ = sigma + TwistClass(p->rho_m_);
  p->d_g_ = weyl_denominator(*sub->group_roots());
  p->d_h_ = weyl_denominator(sub->system());
  p->euler_ = euler_class(*sub);
  // G-side twist must be level-consistent for G.
  for (std::size_t i = 0; i < sub->group_roots()->num_simple(); ++i)
    if (!sigma.shift().dot(sub->group_roots()->simple_coroot(i)).is_integer())
      fail(ErrorCode::BadTwist, "twist " + sigma.str() + " does not pair integrally with the coroots of G");
  return p;
}

// ---------------------------------------------------------------- partial

namespace {

void check_level(const RootSystem& scope, const RationalWeight& shift) {
  for (std::size_t i = 0; i < scope.num_simple(); ++i)
    if (!shift.dot(scope.simple_coroot(i)).is_integer())
      fail(ErrorCode::BadTwist, "shift " + shift.str() + " is not level-consistent for this scope");
}

} // namespace

GroupElement partial(const ScopePtr& scope, const TorusElement& a) {
  if (a.rank() != scope->rank()) fail(ErrorCode::DatumMismatch, "torus element does not match the datum");
  const RationalWeight rest = a.twist().shift() - scope->rho();
  check_level(*scope, rest);
  GroupElement out(scope, TwistClass(rest));
  for (const auto& [w, c] : a.terms()) {
    ChamberResult r = to_dominant_chamber(*scope, a.exponent(w));
    if (!r.regular) continue;
    out.add(r.image - scope->rho(), r.w.det > 0 ? c : neg_checked(c));
  }
  return out;
}

GroupElement partial(const InductionProblem& p, Scope scope, const TorusElement& a) {
  return partial(scope == Scope::G ? p.g_scope() : p.h_scope(), a);
}

// ---------------------------------------------------------------- i_*

GroupElement induce_twisted_spinc(const InductionProblem& p, const TorusElement& a, bool check_invariant) {
  if (a.rank() != p.rank()) fail(ErrorCode::DatumMismatch, "torus element does not match the datum");
  if (!a.is_zero() && !(a.twist() == p.input_twist()))
    fail(ErrorCode::BadTwist, "input twist " + a.twist().str() + " differs from sigma + [rho_M] = " +
                                  p.input_twist().str());
  if (check_invariant && !is_invariant(p.weyl().sub_group(), a))
    fail(ErrorCode::NotWHInvariant, "input is not W_H-invariant");
  if (a.is_zero()) return GroupElement(p.g_scope(), p.sigma());
  GroupElement g = partial(p.g_scope(), multiply(p.d_h(), a));
  const Int wh = static_cast<Int>(p.weyl().sub_group().order());
  GroupElement out(p.g_scope(), p.sigma());
  for (const auto& [l, c] : g.sorted_terms()) {
    if (c % wh != 0) fail(ErrorCode::InexactDivision, "coefficient not divisible by |W_H|");
    out.add(l, c / wh);
  }
  return out;
}

GroupElement induce_classical(const InductionProblem& p, ClassicalKind kind, const TorusElement& a,
                              const std::optional<Weight>& gamma) {
  if (!a.is_zero() && !(a.twist() == p.sigma()))
    fail(ErrorCode::BadTwist, "classical induction expects an untwisted input");
  TorusElement m;
  switch (kind) {
  case ClassicalKind::Holomorphic:
    if (!p.sub()->is_levi()) fail(ErrorCode::NotLevi, "holomorphic induction needs a Levi subgroup");
    m = TorusElement::monomial(p.rho_m());
    break;
  case ClassicalKind::Spin:
    if (!p.rho_m().is_integral()) fail(ErrorCode::NotSpin, "rho_M = " + p.rho_m().str() + " is not in X(T)");
    m = TorusElement::one(p.rank());
    break;
  case ClassicalKind::SpincWith: {
    if (!gamma) fail(ErrorCode::NotCSpinorial, "no character gamma given");
    if (gamma->size() != p.rank()) fail(ErrorCode::DimensionMismatch, "gamma has wrong length");
    if (!subgroup_character_lattice(*p.sub()).contains(*gamma))
      fail(ErrorCode::NotCSpinorial, gamma->str() + " is not a character of H");
    RationalWeight half(*gamma, 2);
    if (!(half - p.rho_m()).is_integral())
      fail(ErrorCode::NotCSpinorial, gamma->str() + " is not c-spinorial");
    m = TorusElement::monomial(half);
    break;
  }
  }
  return induce_twisted_spinc(p, multiply(m, a));
}

GroupElement bwb_irreducible(const InductionProblem& p, const RationalWeight& mu) {
  if (mu.size() != p.rank()) fail(ErrorCode::DimensionMismatch, "weight has wrong length");
  if (!p.input_twist().contains(mu))
    fail(ErrorCode::BadTwist, mu.str() + " is not in the twist class sigma + [rho_M]");
  if (!p.sub()->system().is_dominant(mu)) fail(ErrorCode::NotHDominant, mu.str() + " is not H-dominant");
  GroupElement out(p.g_scope(), p.sigma());
  ChamberResult r = to_dominant_chamber(*p.g_scope(), mu + p.rho_h());
  if (r.regular) out.add(r.image - p.rho_g(), r.w.det);
  return out;
}

// ---------------------------------------------------------------- branching

GroupElement branch(const InductionProblem& p, const GroupElement& a) {
  const ScopePtr& h = p.h_scope();
  GroupElement out(h, a.twist());
  if (a.is_zero()) return out;
  bool positive = true;
  for (const auto& [w, c] : a.terms()) positive = positive && c > 0;
  Covector two_rho_v(p.rank());
  for (const auto& c : h->positive_coroots()) two_rho_v += c;

  TorusElement chi = expand(a);
  while (!chi.is_zero()) {
    const Weight* best = nullptr;
    Int best_h = 0;
    for (const auto& [w, c] : chi.terms()) {
      Int hv = w.dot(two_rho_v);
      if (!best || hv > best_h || (hv == best_h && *best < w)) {
        best = &w;
        best_h = hv;
      }
    }
    const RationalWeight top = chi.exponent(*best);
    const Int c = chi.coeff(*best);
    if (positive && c < 0) fail(ErrorCode::InternalInconsistency, "negative multiplicity while branching");
    out.add(top, c);
    chi -= irreducible_restriction(*h, top).scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------- pairing

TorusElement determinant(const std::vector<std::vector<TorusElement>>& m, std::size_t rank) {
  const std::size_t n = m.size();
  if (n == 0) return TorusElement::one(rank);
  std::unordered_map<std::uint32_t, TorusElement> memo;
  // det of rows [n - popcount(mask), n) against the columns in mask
  auto rec = [&](auto&& self, std::uint32_t mask) -> TorusElement {
    const int k = static_cast<int>(n) - std::popcount(mask);
    if (mask == 0) return TorusElement::one(rank);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    TorusElement sum;
    bool first = true;
    int pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      TorusElement t = multiply(m[static_cast<std::size_t>(k)][j], self(self, mask & ~(1u << j)));
      if (pos % 2) t = -t;
      if (first) {
        sum = t;
        first = false;
      } else if (!t.is_zero()) {
        sum = sum.is_zero() ? t : sum + t;
      }
      ++pos;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, (n >= 32) ? 0xffffffffu : ((1u << n) - 1));
}

PairingReport pairing_report(const InductionProblem& p, const TwistClass& tau,
                             const std::vector<TorusElement>& basis_a, const std::vector<TorusElement>& basis_b) {
  const std::size_t n = p.weyl().index();
  if (basis_a.size() != n || basis_b.size() != n)
    fail(ErrorCode::WrongBasisSize, "bases must have |W^H| = " + std::to_string(n) + " elements");
  const TwistClass other = p.input_twist() - tau;
  for (const auto& a : basis_a)
    if (!a.is_zero() && !(a.twist() == tau)) fail(ErrorCode::BadTwistPairing, "basis_a element not in twist tau");
  for (const auto& b : basis_b)
    if (!b.is_zero() && !(b.twist() == other))
      fail(ErrorCode::BadTwistPairing, "basis_b element not in twist sigma + [rho_M] - tau");
  PairingReport rep;
  rep.basis_a = basis_a;
  rep.basis_b = basis_b;
  std::vector<std::vector<TorusElement>> expanded(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep.gram.emplace_back();
    for (std::size_t j = 0; j < n; ++j) {
      GroupElement g = induce_twisted_spinc(p, multiply(basis_a[i], basis_b[j]), false);
      expanded[i].push_back(expand(g));
      if (expanded[i].back().is_zero()) expanded[i].back() = TorusElement(p.rank(), p.sigma());
      rep.gram[i].push_back(std::move(g));
    }
  }
  rep.determinant = determinant(expanded, p.rank());
  rep.is_unit = false;
  if (rep.determinant.size() == 1) {
    const auto& [w, c] = *rep.determinant.terms().begin();
    RationalWeight x = rep.determinant.exponent(w);
    bool invariant = true;
    for (std::size_t i = 0; i < p.g_scope()->num_simple(); ++i)
      invariant = invariant && x.dot(p.g_scope()->simple_coroot(i)).is_zero();
    rep.is_unit = (c == 1 || c == -1) && invariant;
  }
  return rep;
}

std::vector<TorusElement> steinberg_basis(const InductionProblem& p) {
  const RootDatum& d = p.datum();
  const RootSystem& g = *p.g_scope();
  const std::size_t n = g.num_simple();
  std::vector<Weight> fund;
  for (std::size_t i = 0; i < n; ++i) {
    Weight f(d.rank());
    f[i] = 1;
    RationalWeight x = d.from_fundamental(RationalWeight(f));
    if (!x.is_integral())
      fail(ErrorCode::WrongBasisSize, "the Steinberg basis needs the fundamental weights in X(T)");
    fund.push_back(x.integral());
  }
  const WeylGroup& w = p.weyl().group();
  std::vector<TorusElement> out;
  for (std::size_t k = 0; k < w.order(); ++k) {
    const WeylElement& winv = w[w.inverse_index(k)];
    Weight e(d.rank());
    for (std::size_t i = 0; i < n; ++i)
      if (!g.is_positive(winv.matrix.apply(g.simple_root(i)))) e += fund[i];
    out.push_back(TorusElement::monomial(winv.matrix.apply(e)));
  }
  return out;
}

std::pair<std::vector<TorusElement>, std::vector<TorusElement>> standard_pairing_bases(const InductionProblem& p,
                                                                                       bool tau_is_rho_m) {
  std::vector<TorusElement> base;
  if (p.sub()->is_full()) base.push_back(TorusElement::one(p.rank()));
  else if (p.sub()->is_torus()) base = steinberg_basis(p);
  else fail(ErrorCode::WrongBasisSize, "standard bases are only available for H = T or H = G");
  std::vector<TorusElement> a, b;
  const TorusElement shift = multiply(TorusElement::monomial(p.rho_m()), TorusElement::monomial(p.sigma().shift()));
  for (const auto& e : base) {
    if (tau_is_rho_m) {
      a.push_back(multiply(TorusElement::monomial(p.rho_m()), e));
      b.push_back(multiply(TorusElement::monomial(p.sigma().shift()), e));
    } else {
      a.push_back(e);
      b.push_back(multiply(shift, e));
    }
  }
  return {a, b};
}

// ---------------------------------------------------------------- Lefschetz

TorusElement hodge_de_rham_euler(const InductionProblem& p) { return multiply(p.euler(), dualize(p.euler())); }

// Samples this close to a root wall are redrawn.
constexpr double kWallDistance = 1e-4;

LefschetzReport lefschetz_check(const InductionProblem& p, const TorusElement& euler, const TorusElement& a,
                                int trials, std::uint64_t seed) {
  LefschetzReport rep;
  TorusElement a_d = exact_divide(euler, p.euler());
  rep.symbolic = induce_twisted_spinc(p, multiply(a_d, a));
  const TorusElement sym_t = expand(rep.symbolic);
  // e(D) a = (a_D a) e and w(e) / prod_{R_M} (1 - e^{w b}) = w(e^{-rho_M}) / prod_{R_M^+} (1 - e^{-w b}),
  // so the Euler factor is evaluated in product form instead of expanded.
  const TorusElement num = multiply(a_d, a).shifted(-p.rho_m());

  const WeylGroup& wg = p.weyl().group();
  std::vector<TorusElement> wn;
  std::vector<std::vector<Weight>> wroots;
  for (std::size_t i : p.weyl().reps().reps) {
    wn.push_back(apply_weyl(wg[i], num));
    std::vector<Weight> rs;
    for (const auto& al : p.sub()->complement_positive()) rs.push_back(-wg[i].matrix.apply(al));
    wroots.push_back(std::move(rs));
  }
  const auto all_roots = p.g_scope()->all_roots();
  const double two_pi = 2.0 * std::numbers::pi;
  auto phase = [&](const Weight& x, const std::vector<double>& th) {
    double s = 0.0;
    for (std::size_t i = 0; i < th.size(); ++i) s += static_cast<double>(x[i]) * th[i];
    return std::polar(1.0, two_pi * s);
  };

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> th(p.rank());
    bool ok = false;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      if (attempt > 0) ++rep.resamples;
      for (auto& v : th) v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      ok = true;
      for (const auto& r : all_roots)
        if (std::abs(1.0 - phase(r, th)) < kWallDistance) {
          ok = false;
          break;
        }
    }
    if (!ok) fail(ErrorCode::DegenerateSample, "all resamples hit singular torus points");
    std::complex<double> fixed = 0.0;
    double scale = 0.0;  // size of the summands, the sum may cancel to 0
    for (std::size_t k = 0; k < wn.size(); ++k) {
      std::complex<double> den = 1.0;
      for (const auto& r : wroots[k]) den *= 1.0 - phase(r, th);
      const std::complex<double> term = numeric_evaluate(wn[k], th) / den;
      fixed += term;
      scale += std::abs(term);
    }
    LefschetzSample s;
    s.angles = th;
    s.symbolic = numeric_evaluate(sym_t, th);
    s.fixed_point = fixed;
    s.rel_error = std::abs(s.symbolic - fixed) / std::max({std::abs(s.symbolic), scale, 1.0});
    rep.max_rel_error = std::max(rep.max_rel_error, s.rel_error);
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

} // namespace lietwist
