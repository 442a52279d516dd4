#include <gtest/gtest.h>

#include "lietwist/multiplets.hpp"
#include "lietwist/random.hpp"

using namespace lietwist;

namespace {

ProblemPtr problem(const std::string& g, const std::string& h, const std::string& lattice = "weight") {
  return InductionProblem::build(make_subgroup(RootDatum::build(g, lattice), h));
}

std::vector<Int> dims(const Multiplet& m) {
  std::vector<Int> out;
  for (const auto& x : m.members) out.push_back(dimension(x));
  return out;
}

} // namespace

TEST(Multiplet, FullSubgroupIsSingleton) {
  ProblemPtr p = problem("B2", "G");
  Multiplet m = multiplet(*p, TorusElement::monomial(p->rho_g()));
  ASSERT_EQ(m.members.size(), 1u);
  EXPECT_EQ(m.signs, std::vector<int>{1});
  EXPECT_EQ(alternating_dimension_sum(m), 1);
}

TEST(Multiplet, A2Levi) {
  ProblemPtr p = problem("A2", "levi");
  Multiplet m = multiplet(*p, TorusElement::monomial(p->rho_g()));
  EXPECT_EQ(dims(m), (std::vector<Int>{1, 2, 1}));
  EXPECT_EQ(m.signs, (std::vector<int>{1, -1, 1}));
  EXPECT_EQ(alternating_dimension_sum(m), 0);
}

TEST(Multiplet, F4OverSpin9) {
  ProblemPtr p = problem("F4", "b4");
  Multiplet m = multiplet(*p, TorusElement::monomial(p->rho_g()));
  ASSERT_EQ(m.members.size(), 3u);
  EXPECT_EQ(dims(m), (std::vector<Int>{44, 128, 84}));
  EXPECT_EQ(m.signs, (std::vector<int>{1, -1, 1}));
  for (const auto& x : m.members) {
    ASSERT_EQ(x.size(), 1u);
    EXPECT_EQ(expand(x).augmentation(), dimension(x));
  }
  EXPECT_EQ(alternating_dimension_sum(m), 0);
}

TEST(Multiplet, AlternatingSumVanishes) {
  for (const auto& [g, h, l] : std::vector<std::tuple<const char*, const char*, const char*>>{
           {"G2", "a2long", "weight"}, {"A2", "T", "weight"}, {"B3", "so3xso4", "spin"}}) {
    ProblemPtr p = problem(g, h, l);
    Sampler s(17);
    for (int t = 0; t < 100; ++t) {
      TorusElement a = s.torus_element(TwistClass(p->rho_g()), default_box(*p->g_scope()));
      EXPECT_EQ(alternating_dimension_sum(multiplet(*p, a)), 0) << g << " " << a.str();
    }
  }
}

TEST(Multiplet, GkrsIdentity) {
  for (const auto& [g, h] : std::vector<std::pair<const char*, const char*>>{{"G2", "a2long"}, {"C2", "a1xa1"}, {"A2", "levi"}}) {
    ProblemPtr p = problem(g, h);
    Sampler s(23);
    for (int t = 0; t < 50; ++t) {
      TorusElement a = s.torus_element(TwistClass(p->rho_g()), default_box(*p->g_scope()));
      GkrsComparison c = gkrs_compare(*p, a);
      EXPECT_TRUE(c.equal) << g << " " << a.str();
      EXPECT_EQ(c.lhs, c.rhs);
    }
  }
}

TEST(Multiplet, WrongTwist) {
  ProblemPtr p = problem("B3", "so3xso4", "spin");
  try {
    multiplet(*p, TorusElement::monomial(RationalWeight(Weight{1, 0, 0}, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadTwist);
  }
}
