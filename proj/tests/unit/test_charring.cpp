#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "lietwist/charring.hpp"
#include "lietwist/random.hpp"

using namespace lietwist;

namespace {

TorusElement mono(std::initializer_list<Int> w, Int c = 1) { return TorusElement::monomial(Weight(w), c); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

} // namespace

TEST(Torus, MultiplyAndDualize) {
  EXPECT_EQ(multiply(mono({1, 2}), mono({3, -1})), mono({4, 1}));
  TorusElement a = mono({1, 0}, 3) + mono({0, 1}, -2);
  EXPECT_EQ(multiply(a, TorusElement::one(2)), a);
  EXPECT_EQ(dualize(mono({2, -1})), mono({-2, 1}));
  EXPECT_EQ(dualize(dualize(a)), a);

  // d_A1 d_A1^* = 2 - e^a - e^-a with a = 2w
  DatumPtr a1 = RootDatum::build("A1");
  TorusElement d = weyl_denominator(a1->system());
  EXPECT_EQ(d, mono({1}) - mono({-1}));
  EXPECT_EQ(multiply(d, dualize(d)), mono({0}, 2) - mono({2}) - mono({-2}));
}

TEST(Torus, TwistBookkeeping) {
  TorusElement half = TorusElement::monomial(RationalWeight(Weight{1, 0}, 2));
  EXPECT_EQ(half.twist().shift(), RationalWeight(Weight{1, 0}, 2));
  EXPECT_TRUE(multiply(half, half).twist().is_zero());
  EXPECT_EQ(code_of([&] { half + mono({0, 0}); }), ErrorCode::BadTwist);
  EXPECT_EQ(code_of([&] { multiply(half, mono({1})); }), ErrorCode::DatumMismatch);
  EXPECT_EQ(dualize(half).twist().shift(), RationalWeight(Weight{1, 0}, 2));
}

TEST(Denominator, A2IsJOfRho) {
  DatumPtr a2 = RootDatum::build("A2");
  WeylPtr w = generate_weyl(*a2);
  TorusElement d = weyl_denominator(a2->system());
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(d, antisymmetrize(*w, TorusElement::monomial(rho(*a2))));
  EXPECT_EQ(dualize(d), -d);
}

TEST(Denominator, FactorsThroughSubgroup) {
  for (const auto& [g, h] : std::vector<std::pair<const char*, const char*>>{
           {"A2", "levi"}, {"G2", "a2long"}, {"C2", "a1xa1"}, {"F4", "b4"}}) {
    SubgroupPtr s = make_subgroup(RootDatum::build(g), h);
    EXPECT_EQ(weyl_denominator(s->datum().system()),
              multiply(dualize(euler_class(*s)), weyl_denominator(s->system())))
        << g;
  }
}

TEST(EulerClass, Examples) {
  DatumPtr a1 = RootDatum::build("A1");
  EXPECT_EQ(euler_class(*SubgroupDatum::full(a1)), TorusElement::one(1));
  EXPECT_EQ(euler_class(*SubgroupDatum::torus(a1)), mono({-1}) - mono({1}));
  for (const auto& [g, h] : std::vector<std::pair<const char*, const char*>>{
           {"A2", "T"}, {"G2", "a2long"}, {"B3", "so3xso4"}}) {
    SubgroupPtr s = make_subgroup(RootDatum::build(g, std::string(g) == "B3" ? "spin" : "weight"), h);
    std::vector<Weight> both = s->complement_positive();
    for (const auto& a : s->complement_positive()) both.push_back(-a);
    TorusElement e = euler_class(*s);
    EXPECT_EQ(multiply(e, dualize(e)), product_one_minus(s->datum().rank(), both)) << g;
  }
}

TEST(Freudenthal, Examples) {
  DatumPtr a1 = RootDatum::build("A1");
  EXPECT_EQ(irreducible_restriction(a1->system(), RationalWeight(Weight{1})), mono({1}) + mono({-1}));

  DatumPtr a2 = RootDatum::build("A2");
  TorusElement adj = irreducible_restriction(a2->system(), rho(*a2));
  EXPECT_EQ(adj.augmentation(), 8);
  EXPECT_EQ(adj.coeff(Weight{0, 0}), 2);
  EXPECT_EQ(irreducible_dimension(a2->system(), rho(*a2)), 8);
  // cross-check by exact division J(e^(l + rho)) / J(e^rho)
  WeylPtr w = generate_weyl(*a2);
  EXPECT_EQ(exact_divide(antisymmetrize(*w, TorusElement::monomial(rho(*a2).scaled(Rational(2)))),
                         weyl_denominator(a2->system())),
            adj);
}

TEST(Freudenthal, WeylCharacterFormula) {
  for (const char* g : {"A2", "B2", "G2", "C3"}) {
    DatumPtr d = RootDatum::build(g);
    WeylPtr w = generate_weyl(*d);
    TorusElement den = weyl_denominator(d->system());
    Sampler s(3);
    for (int t = 0; t < 10; ++t) {
      RationalWeight l = s.dominant_weight(d->system(), TwistClass(d->rank()), 2, 2000);
      TorusElement chi = irreducible_restriction(d->system(), l);
      EXPECT_EQ(multiply(den, chi), antisymmetrize(*w, TorusElement::monomial(l + rho(*d)))) << g << " " << l.str();
      EXPECT_EQ(chi.augmentation(), irreducible_dimension(d->system(), l));
    }
  }
}

TEST(Dimension, Examples) {
  DatumPtr a2 = RootDatum::build("A2");
  EXPECT_EQ(dimension(GroupElement::one(a2->roots())), 1);
  EXPECT_EQ(dimension(GroupElement::irreducible(a2->roots(), rho(*a2))), 8);
  DatumPtr f4 = RootDatum::build("F4");
  EXPECT_EQ(irreducible_dimension(f4->system(), RationalWeight(Weight{0, 0, 0, 1})), 26);
  EXPECT_EQ(irreducible_dimension(f4->system(), RationalWeight(Weight{1, 0, 0, 0})), 52);
}

TEST(GroupElement, RejectsNonDominant) {
  DatumPtr a2 = RootDatum::build("A2");
  EXPECT_EQ(code_of([&] { GroupElement::irreducible(a2->roots(), RationalWeight(Weight{-1, 0})); }),
            ErrorCode::NotDominant);
}

TEST(AntiInvariant, Decompose) {
  DatumPtr g2 = RootDatum::build("G2");
  const RootSystem& g = g2->system();
  WeylPtr w = generate_weyl(*g2);
  TorusElement d = weyl_denominator(g);
  auto dec = anti_invariant_decompose(g, d);
  ASSERT_EQ(dec.size(), 1u);
  EXPECT_EQ(dec.begin()->first, rho(*g2));
  EXPECT_EQ(dec.begin()->second, 1);

  RationalWeight mu(Weight{2, 1});
  auto one = anti_invariant_decompose(g, antisymmetrize(*w, TorusElement::monomial(mu)));
  EXPECT_EQ(one, (std::map<RationalWeight, Int>{{mu, 1}}));

  GroupElement b(g2->roots(), TwistClass(2));
  b.add(RationalWeight(Weight{1, 0}), 3);
  b.add(RationalWeight(Weight{0, 1}), -2);
  auto got = anti_invariant_decompose(g, multiply(d, expand(b)));
  EXPECT_EQ(got, (std::map<RationalWeight, Int>{{RationalWeight(Weight{2, 1}), 3}, {RationalWeight(Weight{1, 2}), -2}}));
  EXPECT_EQ(collect_invariant(g2->roots(), expand(b)), b);

  EXPECT_EQ(code_of([&] { anti_invariant_decompose(g, mono({1, 0})); }), ErrorCode::NotAntiInvariant);
}

TEST(Numeric, Evaluate) {
  std::vector<double> theta{0.123, 0.456};
  auto one = numeric_evaluate(TorusElement::one(2), theta);
  EXPECT_DOUBLE_EQ(one.real(), 1.0);
  EXPECT_DOUBLE_EQ(one.imag(), 0.0);
  auto c = numeric_evaluate(mono({1, 2}) + mono({-1, -2}), theta);
  EXPECT_NEAR(c.real(), 2 * std::cos(2 * std::numbers::pi * (0.123 + 2 * 0.456)), 1e-12);
  EXPECT_LT(std::abs(c.imag()), 1e-12);
}

TEST(Numeric, DenominatorProductFormula) {
  DatumPtr d = RootDatum::build("B3", "spin");
  const RootSystem& g = d->system();
  TorusElement den = weyl_denominator(g);
  Sampler s(9);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> th(3);
    for (auto& x : th) x = s.unit();
    auto ev = [&](const RationalWeight& x) {
      double p = 0;
      for (std::size_t i = 0; i < 3; ++i) p += x[i].to_double() * th[i];
      return std::polar(1.0, 2 * std::numbers::pi * p);
    };
    std::complex<double> prod = ev(g.rho());
    for (const auto& a : g.positive_roots()) prod *= 1.0 - ev(RationalWeight(-a));
    std::complex<double> sym = numeric_evaluate(den, th);
    EXPECT_LE(std::abs(sym - prod) / std::max(std::abs(prod), 1.0), 1e-10);
  }
}

TEST(ExactDivide, Inexact) {
  DatumPtr a1 = RootDatum::build("A1");
  TorusElement d = weyl_denominator(a1->system());
  EXPECT_EQ(exact_divide(multiply(d, mono({4}) + mono({0}, 3)), d), mono({4}) + mono({0}, 3));
  EXPECT_EQ(code_of([&] { exact_divide(mono({1}) + mono({0}), mono({0}, 2)); }), ErrorCode::InexactDivision);
}
