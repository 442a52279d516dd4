#include <gtest/gtest.h>

#include <sstream>

#include "lietwist/induction.hpp"
#include "lietwist_cli/app.hpp"
#include "lietwist_cli/json_io.hpp"
#include "lietwist_cli/problem.hpp"
#include "lietwist_cli/verify.hpp"

using namespace lietwist;
using namespace lietwist::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lietwist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

template <class F>
std::pair<ErrorCode, std::string> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  return {ErrorCode::InternalInconsistency, ""};
}

} // namespace

TEST(Problem, Defaults) {
  ProblemDocument p = parse_problem(R"({"group": "G2"})");
  EXPECT_EQ(p.label, "G2");
  EXPECT_EQ(p.lattice, "weight");
  EXPECT_EQ(p.subgroup.str(), "T");
  EXPECT_FALSE(p.twist.has_value());
  EXPECT_EQ(p.seed, 0u);
  ProblemDocument q = parse_problem(R"({"group": {"label": "B3", "lattice": "spin"}, "subgroup": {"preset": "so3xso4"}})");
  EXPECT_EQ(q.subgroup_datum()->complement_positive().size(), 6u);
}

TEST(Problem, PointerMessages) {
  auto [code, msg] = error_of([] { parse_problem(R"({"group": "A2", "subgroup": {"roots": [0, 1, 2, 3]}})"); });
  EXPECT_EQ(code, ErrorCode::SchemaViolation);
  EXPECT_NE(msg.find("/subgroup/roots/3"), std::string::npos) << msg;

  auto [c2, m2] = error_of([] {
    parse_problem(R"({"group": "A1", "input": {"twist": [0], "terms": [{"coeff": 1.5, "weight": [1]}]}})");
  });
  EXPECT_EQ(c2, ErrorCode::SchemaViolation);
  EXPECT_NE(m2.find("/input/terms/0/coeff"), std::string::npos) << m2;

  EXPECT_EQ(error_of([] { parse_problem(R"({"group": "A1", "colour": 1})"); }).first, ErrorCode::SchemaViolation);
  EXPECT_EQ(error_of([] { parse_problem(R"({"group": "A1",)"); }).first, ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_problem(R"({"group": "Q3"})"); }).first, ErrorCode::UnknownSeries);
}

TEST(Problem, RoundTrip) {
  ProblemDocument p = parse_problem(
      R"({"command": "induce", "group": "B3:spin", "subgroup": {"roots": [0, 2]}, "twist": [0, 0, 0],)"
      R"( "input": "vh:[0,0,1]", "options": {"kind": "twisted"}, "seed": 9})");
  ProblemDocument q = parse_problem(p.to_json().dump());
  EXPECT_EQ(p.to_json(), q.to_json());
  EXPECT_EQ(q.seed, 9u);
  EXPECT_EQ(q.subgroup.kind, SubgroupSpec::Kind::Roots);
}

TEST(Problem, SplitGroup) {
  EXPECT_EQ(split_group("B3:spin"), (std::pair<std::string, std::string>{"B3", "spin"}));
  EXPECT_EQ(split_group("A2"), (std::pair<std::string, std::string>{"A2", "weight"}));
}

TEST(JsonIo, TorusRoundTrip) {
  TorusElement a = TorusElement::monomial(RationalWeight(Weight{1, 3}, 2), 4) +
                   TorusElement::monomial(RationalWeight(Weight{-1, 1}, 2), -2);
  EXPECT_EQ(torus_from_json(to_json(a), 2, ""), a);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_cli({"info", "--group", "G2"}).code, 0);
  CliRun bad = run_cli({"info", "--group", "Q3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json::parse(bad.out)["error"]["code"], "UnknownSeries");
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"info", "--frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"bwb", "--group", "A2"}).code, 2);
}

TEST(Run, Deterministic) {
  std::vector<std::string> args{"verify", "--suite", "multiplets", "--seed", "3"};
  CliRun a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["result"]["failed"], 0);
}

TEST(Run, PayloadMatchesLibrary) {
  CliRun r = run_cli({"induce", "--group", "A2", "--subgroup", "T", "--input", "vh:[1,5]"});
  ASSERT_EQ(r.code, 0) << r.out;
  json doc = json::parse(r.out);
  ProblemPtr p = InductionProblem::build(make_subgroup(RootDatum::build("A2"), "T"));
  GroupElement want =
      induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), RationalWeight(Weight{1, 5}))));
  EXPECT_EQ(group_from_json(doc["result"], p->g_scope(), "/result"), want);
  EXPECT_EQ(doc["result"]["dimension"], dimension(want));
  EXPECT_EQ(want, GroupElement::irreducible(p->g_scope(), RationalWeight(Weight{0, 4})));
}

TEST(Verify, SeedsAndSuites) {
  EXPECT_NE(derive_seed(1, "a"), derive_seed(1, "b"));
  EXPECT_NE(derive_seed(1, "a"), derive_seed(2, "a"));
  EXPECT_EQ(derive_seed(5, "weyl/order"), derive_seed(5, "weyl/order"));
  EXPECT_EQ(error_of([] { verify("nonsense", 0); }).first, ErrorCode::SchemaViolation);
  EXPECT_EQ(zoo().size(), 9u);
}
