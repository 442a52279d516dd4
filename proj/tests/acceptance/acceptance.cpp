// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lietwist/multiplets.hpp"
#include "lietwist/random.hpp"
#include "lietwist/spinc.hpp"

using namespace lietwist;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr Int kDimensionBudget = 2000;
constexpr double kLefschetzTolerance = 1e-8;

struct Pair {
  const char* label;
  const char* lattice;
  const char* subgroup;
};

const std::vector<Pair> kZoo{
    {"A1", "weight", "T"},       {"A2", "weight", "T"},    {"A2", "weight", "levi"},
    {"A1xA1", "weight", "levi"}, {"B2", "weight", "T"},    {"G2", "weight", "a2long"},
    {"B3", "spin", "so3xso4"},   {"C2", "weight", "a1xa1"}, {"F4", "weight", "b4"},
};

std::string name(const Pair& z) { return std::string(z.label) + ":" + z.lattice + "/" + z.subgroup; }

ProblemPtr problem(const Pair& z) {
  return InductionProblem::build(make_subgroup(RootDatum::build(z.label, z.lattice), z.subgroup));
}

Int box_for(const RootDatum& d) { return d.rank() >= 4 ? 1 : default_box(d.system()); }

std::vector<Pair> distinct_groups() {
  std::vector<Pair> out;
  for (const auto& z : kZoo) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const Pair& o) {
      return std::string(o.label) == z.label && std::string(o.lattice) == z.lattice;
    });
    if (!seen) out.push_back(Pair{z.label, z.lattice, "T"});
  }
  return out;
}

// Weyl dimension formula, written out here as an independent oracle.
Rational weyl_dimension_oracle(const RootSystem& g, const RationalWeight& lambda) {
  Rational dim(1);
  for (const auto& c : g.positive_coroots()) dim = dim * ((lambda + g.rho()).dot(c) / g.rho().dot(c));
  return dim;
}

struct Status {
  bool ok = true;
  std::string detail;
  std::size_t trials = 0;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Status&)>& body) {
  Status s;
  try {
    body(s);
  } catch (const Error& e) {
    s.ok = false;
    s.detail = std::string(code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    s.ok = false;
    s.detail = e.what();
  }
  if (!s.ok) ++failures;
  std::printf("%s %2d %s (%zu checks)%s%s\n", s.ok ? "PASS" : "FAIL", id, title.c_str(), s.trials,
              s.detail.empty() ? "" : ": ", s.detail.c_str());
  std::fflush(stdout);
}

TorusElement power(const TorusElement& x, int k) {
  TorusElement out = TorusElement::one(x.rank());
  for (int i = 0; i < k; ++i) out = multiply(out, x);
  return out;
}

TorusElement recoordinatize(const TorusElement& a, const RootDatum& from, const RootDatum& to) {
  TorusElement out;
  bool first = true;
  for (const auto& [w, c] : a.sorted_terms()) {
    RationalWeight x = to.from_fundamental(from.to_fundamental(a.exponent(w)));
    if (first) {
      out = TorusElement(to.rank(), TwistClass(x));
      first = false;
    }
    out.add_monomial(x, c);
  }
  return out;
}

} // namespace

int main() {
  criterion(1, "Euler characteristic of G/H", [](Status& s) {
    const std::vector<std::pair<Pair, Int>> cases{
        {{"A2", "weight", "T"}, 6}, {{"G2", "weight", "a2long"}, 2}, {{"F4", "weight", "b4"}, 3}};
    for (const auto& [z, n] : cases) {
      ++s.trials;
      ProblemPtr p = problem(z);
      GroupElement chi = induce_twisted_spinc(*p, dualize(p->euler()));
      s.expect(chi == GroupElement::one(p->g_scope()).scaled(n), name(z) + " gives " + chi.str());
      s.expect(static_cast<Int>(p->weyl().group().order() / p->weyl().sub_group().order()) == n,
               name(z) + " index mismatch");
    }
  });

  criterion(2, "unit induction i_*(V_H(rho_M)) = 1", [](Status& s) {
    for (const auto& z : kZoo) {
      ++s.trials;
      ProblemPtr p = problem(z);
      GroupElement u = induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), p->rho_m())));
      s.expect(u == GroupElement::one(p->g_scope()), name(z) + " gives " + u.str());
    }
  });

  criterion(3, "Borel-Weil-Bott agreement", [](Status& s) {
    for (const auto& z : kZoo) {
      ProblemPtr p = problem(z);
      Sampler r(kSeed + 3);
      for (int t = 0; t < 100; ++t) {
        ++s.trials;
        RationalWeight mu = r.dominant_weight(p->sub()->system(), p->input_twist(), box_for(p->datum()), kDimensionBudget);
        GroupElement lhs = induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), mu)));
        s.expect(lhs == bwb_irreducible(*p, mu), name(z) + " mu = " + mu.str());
      }
    }
  });

  criterion(4, "functoriality T < H < G", [](Status& s) {
    for (const auto& z : kZoo) {
      ProblemPtr p = problem(z);
      if (p->sub()->is_torus() || p->sub()->is_full()) continue;
      ProblemPtr pt = InductionProblem::build(SubgroupDatum::torus(p->datum_ptr()));
      Sampler r(kSeed + 4);
      for (int t = 0; t < 50; ++t) {
        ++s.trials;
        TorusElement a = r.torus_element(TwistClass(p->rho_g()), box_for(p->datum()));
        GroupElement direct = induce_twisted_spinc(*pt, a);
        GroupElement staged = induce_twisted_spinc(*p, expand(partial(p->h_scope(), a)));
        s.expect(direct == staged, name(z) + " a = " + a.str());
      }
    }
  });

  criterion(5, "antisymmetrizer factorizations", [](Status& s) {
    for (const auto& z : kZoo) {
      ProblemPtr p = problem(z);
      const WeylContext& ctx = p->weyl();
      const TwistClass twists[2] = {TwistClass(p->rank()), TwistClass(p->rho_g())};
      Sampler r(kSeed + 5);
      for (int t = 0; t < 200; ++t) {
        ++s.trials;
        TorusElement a = r.torus_element(twists[t % 2], box_for(p->datum()));
        TorusElement jg = apply_antisymmetrizer(ctx, Antisymmetrizer::JG, a);
        s.expect(jg == apply_antisymmetrizer(ctx, Antisymmetrizer::JM, apply_antisymmetrizer(ctx, Antisymmetrizer::JH, a)),
                 name(z) + " J_G != J_M J_H");
        s.expect(jg == apply_antisymmetrizer(ctx, Antisymmetrizer::JH, apply_antisymmetrizer(ctx, Antisymmetrizer::JMop, a)),
                 name(z) + " J_G != J_H J_M^op");
      }
    }
  });

  criterion(6, "GKRS multiplets cancel", [](Status& s) {
    for (const auto& z : kZoo) {
      ProblemPtr p = problem(z);
      if (p->sub()->is_full()) continue;
      Sampler r(kSeed + 6);
      for (int t = 0; t < 100; ++t) {
        ++s.trials;
        TorusElement a = r.torus_element(TwistClass(p->rho_g()), box_for(p->datum()));
        s.expect(alternating_dimension_sum(multiplet(*p, a)) == 0, name(z) + " a = " + a.str());
      }
    }
    ProblemPtr f4 = problem(Pair{"F4", "weight", "b4"});
    Multiplet m = multiplet(*f4, TorusElement::monomial(f4->rho_g()));
    s.expect(m.members.size() == 3, "F4/B4 multiplet has " + std::to_string(m.members.size()) + " members");
    Rational signed_sum(0);
    for (std::size_t i = 0; i < m.members.size(); ++i) {
      ++s.trials;
      Rational dim(0);
      for (const auto& [l, c] : m.members[i].sorted_terms())
        dim = dim + Rational(c) * weyl_dimension_oracle(*f4->h_scope(), l);
      s.expect(dim == Rational(dimension(m.members[i])), "F4/B4 member dimension disagrees with the oracle");
      s.expect(dim == Rational(expand(m.members[i]).augmentation()), "F4/B4 member character size disagrees");
      signed_sum = signed_sum + Rational(m.signs[i]) * dim;
    }
    s.expect(signed_sum == Rational(0), "F4/B4 signed dimensions do not cancel");
  });

  criterion(7, "GKRS operator identity", [](Status& s) {
    for (const auto& z : kZoo) {
      ProblemPtr p = problem(z);
      Sampler r(kSeed + 7);
      for (int t = 0; t < 50; ++t) {
        ++s.trials;
        TorusElement a = r.torus_element(TwistClass(p->rho_g()), box_for(p->datum()));
        GkrsComparison c = gkrs_compare(*p, a);
        s.expect(c.lhs == c.rhs, name(z) + " a = " + a.str());
      }
    }
  });

  criterion(8, "J_G(a) divisible by d_G", [](Status& s) {
    for (const auto& z : distinct_groups()) {
      DatumPtr d = RootDatum::build(z.label, z.lattice);
      WeylPtr w = generate_weyl(*d);
      const TorusElement dg = weyl_denominator(d->system());
      Sampler r(kSeed + 8);
      for (int t = 0; t < 100; ++t) {
        ++s.trials;
        TorusElement a = r.torus_element(TwistClass(d->system().rho()), box_for(*d), d->rank() >= 4 ? 3 : 12);
        TorusElement j = antisymmetrize(*w, a);
        TorusElement q = exact_divide(j, dg);
        s.expect(q.twist().is_zero() && multiply(dg, q) == j && is_invariant(*w, q), std::string(z.label) + " a = " + a.str());
      }
    }
  });

  criterion(9, "Spin^c classification", [](Status& s) {
    for (const auto& z : distinct_groups()) {
      ++s.trials;
      s.expect(classify(*SubgroupDatum::torus(RootDatum::build(z.label, z.lattice))).is_c_spinorial,
               std::string(z.label) + "/T not c-spinorial");
    }
    ++s.trials;
    SpincClassification spin7 = classify(*make_subgroup(RootDatum::build("B3", "spin"), "so3xso4"));
    s.expect(!spin7.is_c_spinorial, "Spin(7)/(SO(3)xSO(4)) reported c-spinorial");
    for (const auto& z : kZoo) {
      SubgroupPtr sub = make_subgroup(RootDatum::build(z.label, z.lattice), z.subgroup);
      if (!sub->is_levi()) continue;
      ++s.trials;
      SpincClassification c = classify(*sub);
      s.expect(c.is_c_spinorial && c.gamma && nu(*sub, *c.gamma).is_zero(), name(z) + " Levi without nu = 0");
    }
  });

  criterion(10, "duality pairing is unimodular", [](Status& s) {
    for (const Pair& z : {Pair{"A1", "weight", "T"}, Pair{"A2", "weight", "T"}}) {
      ProblemPtr p = problem(z);
      for (bool shifted : {false, true}) {
        ++s.trials;
        auto [ba, bb] = standard_pairing_bases(*p, shifted);
        TwistClass tau = shifted ? TwistClass(p->rho_m()) : TwistClass(p->rank());
        PairingReport rep = pairing_report(*p, tau, ba, bb);
        bool unit = rep.determinant.size() == 1 && std::abs(rep.determinant.terms().begin()->second) == 1 &&
                    is_invariant(p->weyl().group(), rep.determinant);
        s.expect(rep.is_unit && unit, name(z) + (shifted ? " tau = [rho_M]" : " tau = 0") + " det = " + rep.determinant.str());
      }
    }
  });

  criterion(11, "D2 character identities and level split", [](Status& s) {
    DatumPtr spin4 = RootDatum::build("D2", "weight");
    DatumPtr so4 = RootDatum::build("D2", "vector");
    auto fundamental = [&](std::size_t i) {
      std::vector<Rational> f(2, Rational(0));
      f[i] = Rational(1);
      return spin4->from_fundamental(RationalWeight::from(f));
    };
    const TorusElement x1 = irreducible_restriction(spin4->system(), fundamental(0));
    const TorusElement x2 = irreducible_restriction(spin4->system(), fundamental(1));
    s.trials += 4;
    s.expect(x1 == TorusElement::monomial(fundamental(0)) + TorusElement::monomial(-fundamental(0)), "x1");
    s.expect(x2 == TorusElement::monomial(fundamental(1)) + TorusElement::monomial(-fundamental(1)), "x2");
    TorusElement y1 = multiply(x1, x1), y2 = multiply(x2, x2), y3 = multiply(x1, x2);
    s.expect(multiply(y1, y2) == multiply(y3, y3), "y1 y2 != y3^2");
    s.expect((multiply(y3, x1) - multiply(y1, x2)).is_zero(), "y3 x1 - y1 x2 != 0");
    const TwistClass odd(so4->from_fundamental(RationalWeight(Weight{1, 0})));
    s.expect(!odd.is_zero(), "w1 lies in the SO(4) lattice");
    for (int r1 = 0; r1 <= 3; ++r1) {
      for (int r2 = 0; r1 + r2 <= 4; ++r2) {
        ++s.trials;
        TorusElement m = multiply(power(x1, r1), power(x2, r2));
        TorusElement in_so4 = recoordinatize(m, *spin4, *so4);
        const bool even = (r1 + r2) % 2 == 0;
        const std::string tag = " at r1 = " + std::to_string(r1) + ", r2 = " + std::to_string(r2);
        s.expect(in_so4.twist() == (even ? TwistClass(2) : odd), "level" + tag);
        GroupElement collected = collect_invariant(so4->roots(), in_so4);
        s.expect(expand(collected) == in_so4, "collection" + tag);
        GroupElement spin_collected = collect_invariant(spin4->roots(), m);
        s.expect(collected.size() == spin_collected.size(), "constituent count" + tag);
        for (const auto& [l, c] : spin_collected.sorted_terms()) {
          RationalWeight in = so4->from_fundamental(spin4->to_fundamental(l));
          s.expect(collected.twist().contains(in) && collected.coeff(in) == c, "constituent" + tag);
        }
      }
    }
  });

  criterion(12, "Lefschetz fixed-point oracle", [](Status& s) {
    double worst = 0;
    for (const auto& z : kZoo) {
      ProblemPtr p = problem(z);
      Sampler r(kSeed + 12);
      TorusElement a = expand(r.group_element(p->h_scope(), p->input_twist(), 1, 3, kDimensionBudget));
      LefschetzReport dirac = lefschetz_check(*p, p->euler(), a, 20, kSeed + 120);
      TorusElement b = expand(r.group_element(p->h_scope(), TwistClass(p->rank()), 1, 3, kDimensionBudget));
      LefschetzReport hodge = lefschetz_check(*p, hodge_de_rham_euler(*p), b, 20, kSeed + 121);
      s.trials += dirac.samples.size() + hodge.samples.size();
      s.expect(dirac.samples.size() == 20 && hodge.samples.size() == 20, name(z) + " sample count");
      worst = std::max({worst, dirac.max_rel_error, hodge.max_rel_error});
      s.expect(dirac.max_rel_error <= kLefschetzTolerance, name(z) + " Dirac error");
      s.expect(hodge.max_rel_error <= kLefschetzTolerance, name(z) + " Hodge error");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max relative error %.3g", worst);
    if (s.ok) s.detail = buf;
  });

  criterion(13, "Weyl character formula", [](Status& s) {
    for (const auto& z : distinct_groups()) {
      DatumPtr d = RootDatum::build(z.label, z.lattice);
      WeylPtr w = generate_weyl(*d);
      const RootSystem& g = d->system();
      const TorusElement dg = weyl_denominator(g);
      Sampler r(kSeed + 13);
      for (int t = 0; t < 50; ++t) {
        ++s.trials;
        RationalWeight lambda = r.dominant_weight(g, TwistClass(d->rank()), box_for(*d), kDimensionBudget);
        TorusElement chi = irreducible_restriction(g, lambda);
        s.expect(multiply(dg, chi) == antisymmetrize(*w, TorusElement::monomial(lambda + g.rho())),
                 std::string(z.label) + " lambda = " + lambda.str());
        s.expect(Rational(chi.augmentation()) == weyl_dimension_oracle(g, lambda),
                 std::string(z.label) + " dimension at lambda = " + lambda.str());
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
