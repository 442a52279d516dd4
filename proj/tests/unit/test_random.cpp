#include <gtest/gtest.h>

#include "lietwist/random.hpp"

using namespace lietwist;

TEST(Sampler, EngineIsStandard) {
  Sampler s(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = s.engine()();
  EXPECT_EQ(x, 9981545732273789042ull);
}

TEST(Sampler, Deterministic) {
  DatumPtr d = RootDatum::build("G2");
  Sampler a(42), b(42);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(a.uniform(-5, 5), b.uniform(-5, 5));
    EXPECT_EQ(a.torus_element(TwistClass(2), 3), b.torus_element(TwistClass(2), 3));
    EXPECT_EQ(a.group_element(d->roots(), TwistClass(2), 3), b.group_element(d->roots(), TwistClass(2), 3));
  }
}

TEST(Sampler, Ranges) {
  Sampler s(1);
  for (int t = 0; t < 1000; ++t) {
    Int x = s.uniform(-3, 4);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 4);
    double u = s.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  Weight w = s.weight(4, 2);
  for (Int c : w) EXPECT_LE(std::abs(c), 2);
  TorusElement a = s.torus_element(TwistClass(RationalWeight(Weight{1, 0}, 2)), 3, 5);
  EXPECT_LE(a.size(), 5u);
  EXPECT_EQ(a.twist(), TwistClass(RationalWeight(Weight{1, 0}, 2)));
}

TEST(Sampler, DominantWithinBudget) {
  DatumPtr f4 = RootDatum::build("F4");
  Sampler s(3);
  for (int t = 0; t < 30; ++t) {
    RationalWeight l = s.dominant_weight(f4->system(), TwistClass(4), 1, 2000);
    EXPECT_TRUE(f4->system().is_dominant(l));
    EXPECT_LE(irreducible_dimension(f4->system(), l), 2000);
  }
  DatumPtr b3 = RootDatum::build("B3", "spin");
  TwistClass half(b3->system().rho());
  for (int t = 0; t < 30; ++t) {
    RationalWeight l = s.dominant_weight(b3->system(), half, 3);
    EXPECT_TRUE(half.contains(l));
    EXPECT_TRUE(b3->system().is_dominant(l));
  }
}

TEST(Sampler, DefaultBox) {
  EXPECT_GE(default_box(RootDatum::build("A1")->system()), 1);
  EXPECT_GE(default_box(RootDatum::build("G2")->system()), default_box(RootDatum::build("A1")->system()));
}
