#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "lietwist/induction.hpp"
#include "lietwist/random.hpp"

using namespace lietwist;

namespace {

ProblemPtr problem(const std::string& g, const std::string& h, const std::string& lattice = "weight") {
  return InductionProblem::build(make_subgroup(RootDatum::build(g, lattice), h));
}

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

TEST(Partial, A1Monomials) {
  DatumPtr a1 = RootDatum::build("A1");
  const ScopePtr& g = a1->roots();
  EXPECT_EQ(partial(g, mono({1})), GroupElement::one(g));
  EXPECT_TRUE(partial(g, mono({0})).is_zero());
  EXPECT_EQ(partial(g, mono({-1})), -GroupElement::one(g));
  EXPECT_EQ(partial(g, mono({3})), GroupElement::irreducible(g, RationalWeight(Weight{2})));
  EXPECT_EQ(partial(g, mono({-3})), GroupElement::irreducible(g, RationalWeight(Weight{2}), -1));
}

TEST(Partial, InvertsDenominator) {
  DatumPtr b2 = RootDatum::build("B2");
  const ScopePtr& g = b2->roots();
  Sampler s(4);
  for (int t = 0; t < 20; ++t) {
    GroupElement b = s.group_element(g, TwistClass(2), 3, 3, 2000);
    EXPECT_EQ(partial(g, multiply(weyl_denominator(*g), expand(b))), b.scaled(static_cast<Int>(generate_weyl(*b2)->order())));
  }
}

TEST(Induce, EulerCharacteristic) {
  for (const auto& [g, h, n] : std::vector<std::tuple<const char*, const char*, Int>>{
           {"A2", "T", 6}, {"G2", "a2long", 2}, {"A2", "levi", 3}, {"C2", "a1xa1", 2}}) {
    ProblemPtr p = problem(g, h);
    EXPECT_EQ(induce_twisted_spinc(*p, dualize(p->euler())), GroupElement::one(p->g_scope()).scaled(n)) << g << "/" << h;
  }
}

TEST(Induce, UnitAndIdentity) {
  for (const auto& [g, h, l] : std::vector<std::tuple<const char*, const char*, const char*>>{
           {"A1", "T", "weight"}, {"A2", "levi", "weight"}, {"G2", "a2long", "weight"},
           {"B3", "so3xso4", "spin"}, {"F4", "b4", "weight"}}) {
    ProblemPtr p = problem(g, h, l);
    EXPECT_EQ(induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), p->rho_m()))),
              GroupElement::one(p->g_scope()))
        << g;
  }
  ProblemPtr full = problem("B2", "G");
  Sampler s(2);
  for (int t = 0; t < 10; ++t) {
    GroupElement b = s.group_element(full->g_scope(), TwistClass(2), 3, 3, 2000);
    EXPECT_EQ(induce_twisted_spinc(*full, expand(b)), b);
  }
}

TEST(Induce, HolomorphicIsWeylCharacter) {
  ProblemPtr p = problem("A2", "T");
  EXPECT_EQ(induce_classical(*p, ClassicalKind::Holomorphic, mono({0, 0})), GroupElement::one(p->g_scope()));
  EXPECT_EQ(induce_classical(*p, ClassicalKind::Holomorphic, mono({2, 1})),
            GroupElement::irreducible(p->g_scope(), RationalWeight(Weight{2, 1})));
  // s1 . (-2, 1) = (0, 0) with sign -1
  EXPECT_EQ(induce_classical(*p, ClassicalKind::Holomorphic, mono({-2, 1})), -GroupElement::one(p->g_scope()));
  EXPECT_TRUE(induce_classical(*p, ClassicalKind::Holomorphic, mono({-1, 0})).is_zero());
}

TEST(Induce, SpinAndSpincVariants) {
  ProblemPtr a1 = problem("A1", "T");
  EXPECT_TRUE(induce_classical(*a1, ClassicalKind::Spin, TorusElement::one(1)).is_zero());
  EXPECT_EQ(induce_classical(*a1, ClassicalKind::Spin, mono({1})), GroupElement::one(a1->g_scope()));

  for (const auto& [g, h] : std::vector<std::pair<const char*, const char*>>{{"A2", "levi"}, {"A2", "T"}, {"B2", "T"}}) {
    ProblemPtr p = problem(g, h);
    Weight gamma = p->rho_m().scaled(Rational(2)).integral();
    Sampler s(11);
    for (int t = 0; t < 10; ++t) {
      GroupElement hb = s.group_element(p->h_scope(), TwistClass(p->rank()), 2, 2, 500);
      TorusElement a = expand(hb);
      EXPECT_EQ(induce_classical(*p, ClassicalKind::Holomorphic, a), induce_classical(*p, ClassicalKind::SpincWith, a, gamma))
          << g << "/" << h;
    }
  }
}

TEST(Bwb, Examples) {
  ProblemPtr p = problem("A2", "T");
  EXPECT_EQ(bwb_irreducible(*p, p->rho_m()), GroupElement::one(p->g_scope()));
  EXPECT_TRUE(bwb_irreducible(*p, RationalWeight(Weight{0, 0})).is_zero());
  ProblemPtr levi = problem("A2", "levi");
  EXPECT_EQ(bwb_irreducible(*levi, levi->rho_m()), GroupElement::one(levi->g_scope()));
}

TEST(Bwb, AgreesWithInduction) {
  ProblemPtr p = problem("G2", "a2long");
  Sampler s(5);
  for (int t = 0; t < 30; ++t) {
    RationalWeight mu = s.dominant_weight(p->sub()->system(), p->input_twist(), 4, 2000);
    EXPECT_EQ(induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), mu))), bwb_irreducible(*p, mu))
        << mu.str();
  }
}

TEST(Branch, AdjointToLevi) {
  ProblemPtr p = problem("A2", "levi");
  GroupElement adj = GroupElement::irreducible(p->g_scope(), RationalWeight(Weight{1, 1}));
  GroupElement h = branch(*p, adj);
  EXPECT_EQ(h.size(), 4u);
  std::vector<Int> dims;
  for (const auto& [l, c] : h.sorted_terms()) {
    EXPECT_EQ(c, 1);
    dims.push_back(irreducible_dimension(*p->h_scope(), l));
  }
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<Int>{1, 2, 2, 3}));
  EXPECT_EQ(expand(h), expand(adj));
}

TEST(Pairing, Unit) {
  for (const char* g : {"A1", "A2"}) {
    ProblemPtr p = problem(g, "T");
    for (bool shifted : {false, true}) {
      auto [ba, bb] = standard_pairing_bases(*p, shifted);
      EXPECT_EQ(ba.size(), p->weyl().index());
      TwistClass tau = shifted ? TwistClass(p->rho_m()) : TwistClass(p->rank());
      PairingReport rep = pairing_report(*p, tau, ba, bb);
      EXPECT_TRUE(rep.is_unit) << g << " " << rep.determinant.str();
    }
  }
  ProblemPtr full = problem("A2", "G");
  auto [ba, bb] = standard_pairing_bases(*full, false);
  PairingReport rep = pairing_report(*full, TwistClass(2), ba, bb);
  ASSERT_EQ(rep.gram.size(), 1u);
  EXPECT_EQ(rep.gram[0][0], GroupElement::one(full->g_scope()));
  EXPECT_EQ(code_of([&] { pairing_report(*full, TwistClass(2), {}, {}); }), ErrorCode::WrongBasisSize);
}

TEST(Determinant, Small) {
  TorusElement x = mono({1}), y = mono({-1});
  EXPECT_EQ(determinant({{x, TorusElement(1)}, {TorusElement(1), y}}, 1), TorusElement::one(1));
  EXPECT_TRUE(determinant({{x, mono({0})}, {mono({0}), y}}, 1).is_zero());
  EXPECT_TRUE(determinant({{x, x}, {x, x}}, 1).is_zero());
}

TEST(Lefschetz, HodgeOfOne) {
  for (const auto& [g, h] : std::vector<std::pair<const char*, const char*>>{{"A2", "T"}, {"G2", "a2long"}, {"C2", "a1xa1"}}) {
    ProblemPtr p = problem(g, h);
    LefschetzReport r = lefschetz_check(*p, hodge_de_rham_euler(*p), TorusElement::one(p->rank()), 20, 3);
    EXPECT_EQ(r.symbolic, GroupElement::one(p->g_scope()).scaled(static_cast<Int>(p->weyl().index())));
    EXPECT_EQ(r.samples.size(), 20u);
    EXPECT_TRUE(r.pass()) << r.max_rel_error;
  }
}

TEST(Lefschetz, DiracRandom) {
  ProblemPtr p = problem("B3", "so3xso4", "spin");
  Sampler s(8);
  TorusElement a = expand(s.group_element(p->h_scope(), p->input_twist(), 1, 3, 2000));
  LefschetzReport r = lefschetz_check(*p, p->euler(), a, 20, 99);
  EXPECT_EQ(r.symbolic, induce_twisted_spinc(*p, a));
  EXPECT_LE(r.max_rel_error, LefschetzReport::kTolerance);
}

TEST(Errors, Codes) {
  ProblemPtr levi = problem("A2", "levi");
  EXPECT_EQ(code_of([&] { induce_twisted_spinc(*levi, mono({0, 0})); }), ErrorCode::BadTwist);
  TorusElement not_inv = TorusElement::monomial(levi->rho_m() + RationalWeight(Weight{1, 0}));
  EXPECT_EQ(code_of([&] { induce_twisted_spinc(*levi, not_inv); }), ErrorCode::NotWHInvariant);
  EXPECT_EQ(code_of([&] { bwb_irreducible(*levi, RationalWeight(Weight{-2, 1}, 2)); }), ErrorCode::NotHDominant);
  EXPECT_EQ(code_of([&] { bwb_irreducible(*levi, RationalWeight(Weight{1, 0})); }), ErrorCode::BadTwist);

  ProblemPtr g2 = problem("G2", "a2long");
  EXPECT_EQ(code_of([&] { induce_classical(*g2, ClassicalKind::Holomorphic, TorusElement::one(2)); }), ErrorCode::NotLevi);
  ProblemPtr b3 = problem("B3", "so3xso4", "spin");
  EXPECT_EQ(code_of([&] { induce_classical(*b3, ClassicalKind::Spin, TorusElement::one(3)); }), ErrorCode::NotSpin);
  EXPECT_EQ(code_of([&] { induce_classical(*b3, ClassicalKind::SpincWith, TorusElement::one(3), Weight{0, 0, 0}); }),
            ErrorCode::NotCSpinorial);
  EXPECT_EQ(code_of([&] { InductionProblem::build(SubgroupDatum::torus(RootDatum::build("A1")), TwistClass(RationalWeight(Weight{1, 1}, 3))); }),
            ErrorCode::DimensionMismatch);
}
