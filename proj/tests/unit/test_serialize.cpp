#include <gtest/gtest.h>

#include "lietwist/random.hpp"
#include "lietwist/serialize.hpp"

using namespace lietwist;

TEST(Serialize, RationalWeight) {
  EXPECT_EQ(parse_rational_weight("[1, -2]"), RationalWeight(Weight{1, -2}));
  EXPECT_EQ(parse_rational_weight("[1/2,3/2]"), RationalWeight(Weight{1, 3}, 2));
  EXPECT_EQ(parse_rational_weight("[]").size(), 0u);
  for (const char* bad : {"1,2", "[1,x]", "[1/0]", "[1,,2]"}) {
    try {
      parse_rational_weight(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Serialize, TorusRoundTrip) {
  Sampler s(5);
  DatumPtr d = RootDatum::build("B3", "spin");
  for (const TwistClass& tw : {TwistClass(3), TwistClass(d->system().rho())}) {
    for (int t = 0; t < 20; ++t) {
      TorusElement a = s.torus_element(tw, 4);
      std::string text = to_text(a);
      EXPECT_EQ(torus_from_text(3, text), a) << text;
      EXPECT_EQ(to_text(torus_from_text(3, text)), text);
    }
  }
}

TEST(Serialize, GroupRoundTrip) {
  Sampler s(6);
  DatumPtr d = RootDatum::build("G2");
  for (int t = 0; t < 20; ++t) {
    GroupElement a = s.group_element(d->roots(), TwistClass(2), 3, 3, 2000);
    EXPECT_EQ(group_from_text(d->roots(), to_text(a)), a);
  }
}

TEST(Serialize, Rejects) {
  DatumPtr d = RootDatum::build("A2");
  for (const char* bad : {"twist: [0,0]\n3 [1,0]\n", "twist: [0]\n", "twist: [0,0]\n1 @ [1/2,0]\n"}) {
    try {
      torus_from_text(2, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  try {
    group_from_text(d->roots(), "twist: [0,0]\n1 @ [-1,0]\n");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDominant);
  }
}
