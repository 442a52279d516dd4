#include "lietwist_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>

#include "lietwist/random.hpp"

namespace lietwist::cli {

const std::vector<ZooPair>& zoo() {
  static const std::vector<ZooPair> pairs{
      {"A1", "weight", "T"},       {"A2", "weight", "T"},    {"A2", "weight", "levi"},
      {"A1xA1", "weight", "levi"}, {"B2", "weight", "T"},    {"G2", "weight", "a2long"},
      {"B3", "spin", "so3xso4"},   {"C2", "weight", "a1xa1"}, {"F4", "weight", "b4"},
  };
  return pairs;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"appendixB", "appendixC", "charring", "induction",
                                              "multiplets", "spinc",     "weyl"};
  return names;
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
  // FNV-1a over the tag, mixed with the seed (splitmix64 finalizer)
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = h ^ (seed + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::size_t VerifyReport::failed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

json VerifyReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json j{{"suite", c.suite}, {"check", c.check}, {"pair", c.pair}, {"pass", c.pass}, {"trials", c.trials}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.pass) j["counterexample"] = c.counterexample;
    list.push_back(std::move(j));
  }
  return json{{"suite", suite},
              {"seed", seed},
              {"passed", checks.size() - failed()},
              {"failed", failed()},
              {"checks", std::move(list)}};
}

namespace {

struct Outcome {
  bool pass = true;
  std::size_t trials = 0;
  std::string detail;
  json counterexample;

  void fail(const std::string& what, json example = nullptr) {
    if (!pass) return;
    pass = false;
    detail = what;
    counterexample = std::move(example);
  }
  void expect(bool ok, const std::string& what, json example = nullptr) {
    if (!ok) fail(what, std::move(example));
  }
};

class Runner {
public:
  Runner(std::string suite, std::uint64_t seed, VerifyReport& report)
      : suite_(std::move(suite)), seed_(seed), report_(report) {}

  template <class F>
  void check(const std::string& name, const std::string& pair, F&& body) {
    CheckRecord rec;
    rec.suite = suite_;
    rec.check = name;
    rec.pair = pair;
    Sampler sampler(derive_seed(seed_, suite_ + "/" + name + "/" + pair));
    Outcome o;
    try {
      body(sampler, o);
    } catch (const Error& e) {
      o.pass = false;
      o.detail = std::string(code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = e.what();
    }
    rec.pass = o.pass;
    rec.trials = o.trials;
    rec.detail = o.detail;
    rec.counterexample = o.counterexample;
    report_.checks.push_back(std::move(rec));
  }

private:
  std::string suite_;
  std::uint64_t seed_;
  VerifyReport& report_;
};

ProblemPtr problem_for(const ZooPair& z) {
  return InductionProblem::build(make_subgroup(RootDatum::build(z.label, z.lattice), z.subgroup));
}

// Random modules larger than this are redrawn.
constexpr Int kDimensionBudget = 2000;

// Rank-4 data use a unit box: chamber-reduced random weights grow quickly there.
Int small_box(const RootDatum& d) { return d.rank() >= 4 ? 1 : default_box(d.system()); }

std::vector<ZooPair> distinct_groups() {
  std::vector<ZooPair> out;
  for (const auto& z : zoo()) {
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const ZooPair& o) { return o.label == z.label && o.lattice == z.lattice; });
    if (!seen) out.push_back(ZooPair{z.label, z.lattice, "T"});
  }
  return out;
}

std::string group_name(const ZooPair& z) { return z.label + ":" + z.lattice; }

TorusElement h_invariant_input(Sampler& s, const InductionProblem& p, const TwistClass& twist, Int box) {
  return expand(s.group_element(p.h_scope(), twist, box, 3, kDimensionBudget));
}

GroupElement product(const ScopePtr& scope, const GroupElement& a, const GroupElement& b) {
  return collect_invariant(scope, multiply(expand(a), expand(b)));
}

GroupElement multiple_of_one(const ScopePtr& scope, Int k) { return GroupElement::one(scope).scaled(k); }

json weyl_counterexample(const RationalWeight& mu) { return json{{"weight", to_json(mu)}}; }

// ---------------------------------------------------------------- weyl

void weyl_suite(Runner& r) {
  for (const auto& z : zoo()) {
    ProblemPtr p = problem_for(z);
    const WeylGroup& w = p->weyl().group();
    const WeylGroup& wh = p->weyl().sub_group();
    const RootSystem& g = *p->g_scope();
    const std::size_t rank = p->rank();

    r.check("order", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      o.expect(w.order() == p->datum().weyl_order_formula(), "enumerated |W_G| differs from the product formula");
      o.expect(p->weyl().index() * wh.order() == w.order(), "|W^H| |W_H| != |W_G|");
    });

    r.check("reflection_closure", z.name(), [&](Sampler&, Outcome& o) {
      const auto roots = g.all_roots();
      for (std::size_t i = 0; i < g.positive_roots().size(); ++i) {
        IntMatrix s = g.reflection(i);
        for (const auto& a : roots) {
          ++o.trials;
          o.expect(g.is_root(s.apply(a)), "reflection image is not a root", json{{"root", to_json(a)}});
        }
      }
    });

    r.check("coset_factorization", z.name(), [&](Sampler&, Outcome& o) {
      std::vector<int> hits(w.order(), 0);
      for (std::size_t rep : p->weyl().reps().reps) {
        for (const auto& h : wh.elements()) {
          ++o.trials;
          auto idx = w.index_of(w[rep].matrix * h.matrix);
          if (!idx) {
            o.fail("product left the group");
            return;
          }
          ++hits[*idx];
          o.expect(w[*idx].length >= w[rep].length, "coset representative is not of minimal length",
                   json{{"rep", rep}});
        }
      }
      for (std::size_t i = 0; i < hits.size(); ++i)
        o.expect(hits[i] == 1, "W_G element without a unique factorization w = r h", json{{"element", i}});
    });

    r.check("chamber", z.name(), [&](Sampler& s, Outcome& o) {
      const Int box = small_box(p->datum());
      for (int t = 0; t < 50; ++t) {
        ++o.trials;
        RationalWeight mu = RationalWeight(s.weight(rank, box)) + g.rho();
        ChamberResult c = to_dominant_chamber(g, mu);
        o.expect(c.regular == g.is_regular(mu), "regularity mismatch", weyl_counterexample(mu));
        if (!c.regular) continue;
        o.expect(g.is_strictly_dominant(c.image), "image not strictly dominant", weyl_counterexample(mu));
        o.expect(c.w.matrix.apply(mu) == c.image, "w(mu) differs from the reported image", weyl_counterexample(mu));
        if (rank <= 3) {
          std::size_t count = 0;
          for (const auto& e : w.elements()) count += g.is_strictly_dominant(e.matrix.apply(mu)) ? 1 : 0;
          o.expect(count == 1, "dominant chamber element is not unique", weyl_counterexample(mu));
        }
      }
    });

    r.check("antisymmetrizer_factorizations", z.name(), [&](Sampler& s, Outcome& o) {
      const Int box = small_box(p->datum());
      const TwistClass twists[2] = {TwistClass(rank), TwistClass(g.rho())};
      for (int t = 0; t < 200; ++t) {
        ++o.trials;
        TorusElement a = s.torus_element(twists[t % 2], box);
        const WeylContext& ctx = p->weyl();
        TorusElement jg = apply_antisymmetrizer(ctx, Antisymmetrizer::JG, a);
        TorusElement jm_jh = apply_antisymmetrizer(ctx, Antisymmetrizer::JM, apply_antisymmetrizer(ctx, Antisymmetrizer::JH, a));
        TorusElement jh_jmop =
            apply_antisymmetrizer(ctx, Antisymmetrizer::JH, apply_antisymmetrizer(ctx, Antisymmetrizer::JMop, a));
        o.expect(jg == jm_jh, "J_G != J_M J_H", to_json(a));
        o.expect(jg == jh_jmop, "J_G != J_H J_M^op", to_json(a));
        if (t < 20) o.expect(is_anti_invariant(w, jg), "J_G(a) is not anti-invariant", to_json(a));
      }
    });
  }
}

// ---------------------------------------------------------------- charring

void charring_suite(Runner& r) {
  for (const auto& z : distinct_groups()) {
    DatumPtr d = RootDatum::build(z.label, z.lattice);
    WeylPtr w = generate_weyl(*d);
    const ScopePtr& gs = d->roots();
    const RootSystem& g = *gs;
    const std::size_t rank = d->rank();
    const TorusElement dg = weyl_denominator(g);
    const Int box = small_box(*d);

    r.check("weyl_character_formula", group_name(z), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 50; ++t) {
        ++o.trials;
        RationalWeight lambda = s.dominant_weight(g, TwistClass(rank), box, kDimensionBudget);
        TorusElement chi = irreducible_restriction(g, lambda);
        o.expect(multiply(dg, chi) == antisymmetrize(*w, TorusElement::monomial(lambda + g.rho())),
                 "d_G ch V(lambda) != J_G(e^(lambda + rho))", weyl_counterexample(lambda));
        o.expect(chi.augmentation() == irreducible_dimension(g, lambda), "Freudenthal and Weyl dimensions differ",
                 weyl_counterexample(lambda));
        if (t < 5) o.expect(is_invariant(*w, chi), "character is not W-invariant", weyl_counterexample(lambda));
      }
    });

    r.check("denominator_numeric", group_name(z), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 10; ++t) {
        ++o.trials;
        std::vector<double> theta(rank);
        for (auto& x : theta) x = s.unit();
        auto ev = [&](const RationalWeight& x) {
          double phase = 0;
          for (std::size_t i = 0; i < rank; ++i) phase += x[i].to_double() * theta[i];
          return std::polar(1.0, 2 * std::numbers::pi * phase);
        };
        std::complex<double> prod = ev(g.rho());
        for (const auto& a : g.positive_roots()) prod *= 1.0 - ev(RationalWeight(-a));
        std::complex<double> sym = numeric_evaluate(dg, theta);
        double err = std::abs(sym - prod) / std::max({std::abs(sym), std::abs(prod), 1.0});
        o.expect(err <= 1e-9, "numeric d_G differs from the product formula");
      }
    });

    r.check("dual_denominator", group_name(z), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      Int sign = g.positive_roots().size() % 2 == 0 ? 1 : -1;
      o.expect(dualize(dg) == dg.scaled(sign), "d_G^* != (-1)^N d_G");
    });

    r.check("anti_invariant_basis", group_name(z), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 20; ++t) {
        ++o.trials;
        GroupElement b = s.group_element(gs, TwistClass(rank), box, 3, kDimensionBudget);
        auto dec = anti_invariant_decompose(g, multiply(dg, expand(b)));
        std::map<RationalWeight, Int> want;
        for (const auto& [l, c] : b.sorted_terms()) want[l + g.rho()] = c;
        o.expect(dec == want, "d_G b does not decompose into J_G(e^(lambda + rho))", to_json(b, "G"));
        o.expect(collect_invariant(gs, expand(b)) == b, "invariant collection does not invert expansion",
                 to_json(b, "G"));
      }
    });
  }

  for (const auto& z : zoo()) {
    ProblemPtr p = problem_for(z);
    const std::size_t rank = p->rank();
    r.check("denominator_factorization", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      o.expect(p->d_g() == multiply(dualize(p->euler()), p->d_h()), "d_G != e^* d_H");
    });
    r.check("euler_square", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      std::vector<Weight> both = p->sub()->complement_positive();
      for (const auto& a : p->sub()->complement_positive()) both.push_back(-a);
      o.expect(multiply(p->euler(), dualize(p->euler())) == product_one_minus(rank, both),
               "e e^* != prod over R_M of (1 - e^a)");
    });
    r.check("twist_arithmetic", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      o.expect(TwistClass(p->rho_m()) + TwistClass(p->rho_h()) == TwistClass(p->rho_g()), "[rho_M] + [rho_H] != [rho_G]");
      o.expect(p->rho_m().scaled(Rational(2)).is_integral(), "2 rho_M is not in X(T)");
      o.expect(p->euler().twist() == TwistClass(p->rho_m()), "Euler class twist is not [rho_M]");
    });
  }
}

// ---------------------------------------------------------------- appendix C

void appendix_c_suite(Runner& r) {
  for (const auto& z : distinct_groups()) {
    DatumPtr d = RootDatum::build(z.label, z.lattice);
    WeylPtr w = generate_weyl(*d);
    const RootSystem& g = d->system();
    const TorusElement dg = weyl_denominator(g);
    const Int box = small_box(*d);
    const std::size_t terms = d->rank() >= 4 ? 3 : 12;
    r.check("divisible_by_denominator", group_name(z), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 100; ++t) {
        ++o.trials;
        TorusElement a = s.torus_element(TwistClass(g.rho()), box, terms);
        TorusElement j = antisymmetrize(*w, a);
        TorusElement q = exact_divide(j, dg);
        o.expect(q.twist().is_zero(), "quotient is not untwisted", to_json(a));
        o.expect(multiply(dg, q) == j, "d_G q != J_G(a)", to_json(a));
        o.expect(is_invariant(*w, q), "quotient is not W_G-invariant", to_json(a));
      }
    });
  }
}

// ---------------------------------------------------------------- induction

void induction_suite(Runner& r) {
  for (const auto& z : zoo()) {
    ProblemPtr p = problem_for(z);
    const std::size_t rank = p->rank();
    const Int box = small_box(p->datum());
    const ScopePtr& gs = p->g_scope();

    r.check("euler_characteristic", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      GroupElement chi = induce_twisted_spinc(*p, dualize(p->euler()));
      o.expect(chi == multiple_of_one(gs, static_cast<Int>(p->weyl().index())),
               "Hodge-de Rham induction is not |W^H| [1]", to_json(chi, "G"));
    });

    r.check("unit", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      GroupElement u = induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), p->rho_m())));
      o.expect(u == GroupElement::one(gs), "i_*(V_H(rho_M)) != 1", to_json(u, "G"));
    });

    r.check("bwb_agreement", z.name(), [&](Sampler& s, Outcome& o) {
      std::size_t zeros = 0;
      for (int t = 0; t < 100; ++t) {
        ++o.trials;
        RationalWeight mu = s.dominant_weight(p->sub()->system(), p->input_twist(), box, kDimensionBudget);
        GroupElement lhs = induce_twisted_spinc(*p, expand(GroupElement::irreducible(p->h_scope(), mu)));
        GroupElement rhs = bwb_irreducible(*p, mu);
        zeros += rhs.is_zero() ? 1 : 0;
        o.expect(lhs == rhs, "i_*(V_H(mu)) differs from the Borel-Weil-Bott answer", weyl_counterexample(mu));
      }
      if (o.pass) o.detail = std::to_string(zeros) + " singular cases";
    });

    if (!p->sub()->is_torus() && !p->sub()->is_full()) {
      r.check("functoriality", z.name(), [&](Sampler& s, Outcome& o) {
        ProblemPtr pt = InductionProblem::build(SubgroupDatum::torus(p->datum_ptr()));
        for (int t = 0; t < 50; ++t) {
          ++o.trials;
          TorusElement a = s.torus_element(TwistClass(p->rho_g()), box);
          GroupElement direct = induce_twisted_spinc(*pt, a);
          GroupElement k = partial(p->h_scope(), a);
          GroupElement staged = induce_twisted_spinc(*p, expand(k));
          o.expect(direct == staged, "i_{T->G} != i_{H->G} k_{T->H}", to_json(a));
        }
      });
    }

    r.check("linearity", z.name(), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 10; ++t) {
        ++o.trials;
        TorusElement a = h_invariant_input(s, *p, p->input_twist(), box);
        GroupElement b = s.group_element(gs, TwistClass(rank), 1, 2, 100);
        GroupElement lhs = induce_twisted_spinc(*p, multiply(expand(b), a));
        GroupElement rhs = product(gs, b, induce_twisted_spinc(*p, a));
        o.expect(lhs == rhs, "i_*(b a) != b i_*(a)", json{{"a", to_json(a)}, {"b", to_json(b, "G")}});
      }
    });

    r.check("branch", z.name(), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 10; ++t) {
        ++o.trials;
        GroupElement b(gs, TwistClass(rank));
        for (int k = 0; k < 2; ++k) b.add(s.dominant_weight(*gs, TwistClass(rank), 1, kDimensionBudget), s.uniform(1, 3));
        GroupElement h = branch(*p, b);
        o.expect(expand(h) == expand(b), "branching changes the T-character", to_json(b, "G"));
        o.expect(dimension(h) == dimension(b), "branching changes the dimension", to_json(b, "G"));
      }
    });

    if (p->sub()->is_levi()) {
      r.check("borel_weil", z.name(), [&](Sampler& s, Outcome& o) {
        Lattice xh = subgroup_character_lattice(*p->sub());
        o.expect(induce_classical(*p, ClassicalKind::Holomorphic, TorusElement::one(rank)) == GroupElement::one(gs),
                 "holomorphic induction of the trivial character is not 1");
        for (int t = 0; t < 200 && o.trials < 10; ++t) {
          Weight lambda(rank);
          for (const auto& b : xh.basis()) lambda = lambda.plus_multiple(s.uniform(-2, 2), b);
          if (!gs->is_dominant(RationalWeight(lambda))) continue;
          ++o.trials;
          GroupElement got = induce_classical(*p, ClassicalKind::Holomorphic, TorusElement::monomial(lambda));
          o.expect(got == GroupElement::irreducible(gs, RationalWeight(lambda)),
                   "holomorphic induction of a dominant character is not V(lambda)", to_json(lambda));
        }
      });
    }

    r.check("lefschetz", z.name(), [&](Sampler& s, Outcome& o) {
      const std::uint64_t seed = s.engine()();
      TorusElement a = h_invariant_input(s, *p, p->input_twist(), 1);
      LefschetzReport dirac = lefschetz_check(*p, p->euler(), a, 20, seed);
      TorusElement b = h_invariant_input(s, *p, TwistClass(rank), 1);
      LefschetzReport hodge = lefschetz_check(*p, hodge_de_rham_euler(*p), b, 20, seed + 1);
      o.trials = dirac.samples.size() + hodge.samples.size();
      o.expect(dirac.pass(), "Dirac fixed-point sum mismatch", to_json(a));
      o.expect(hodge.pass(), "Hodge-de Rham fixed-point sum mismatch", to_json(b));
      char buf[64];
      std::snprintf(buf, sizeof buf, "max relative error %.3g", std::max(dirac.max_rel_error, hodge.max_rel_error));
      if (o.pass) o.detail = buf;
    });

    if (p->sub()->is_torus() && rank <= 2 && p->datum().pi1().torsion_free()) {
      r.check("pairing_unit", z.name(), [&](Sampler&, Outcome& o) {
        for (bool shifted : {false, true}) {
          ++o.trials;
          auto [ba, bb] = standard_pairing_bases(*p, shifted);
          TwistClass tau = shifted ? TwistClass(p->rho_m()) : TwistClass(rank);
          PairingReport rep = pairing_report(*p, tau, ba, bb);
          o.expect(rep.is_unit, std::string("Gram determinant is not a unit for tau = ") + (shifted ? "[rho_M]" : "0"),
                   to_json(rep.determinant));
        }
      });
    }
  }
}

// ---------------------------------------------------------------- multiplets

void multiplets_suite(Runner& r) {
  for (const auto& z : zoo()) {
    ProblemPtr p = problem_for(z);
    const Int box = small_box(p->datum());
    const TwistClass source_twist(p->rho_g());

    r.check("alternating_sum", z.name(), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 100; ++t) {
        ++o.trials;
        TorusElement a = s.torus_element(source_twist, box);
        Multiplet m = multiplet(*p, a);
        o.expect(alternating_dimension_sum(m) == 0, "signed dimensions do not cancel", to_json(a));
      }
    });

    r.check("gkrs_identity", z.name(), [&](Sampler& s, Outcome& o) {
      for (int t = 0; t < 50; ++t) {
        ++o.trials;
        TorusElement a = s.torus_element(source_twist, box);
        o.expect(gkrs_identity_check(*p, a), "e^* j_G^* partial_G(a) != j_H^* partial_H(J_M^op a)", to_json(a));
      }
    });

    r.check("trivial_source", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      Multiplet m = multiplet(*p, TorusElement::monomial(p->rho_g()));
      o.expect(m.members.size() == p->weyl().index(), "multiplet size differs from |W^H|");
      for (const auto& member : m.members)
        o.expect(dimension(member) == expand(member).augmentation(), "member dimension disagrees with its character");
      o.expect(alternating_dimension_sum(m) == 0, "signed dimensions do not cancel");
      std::string dims;
      for (std::size_t i = 0; i < m.members.size(); ++i)
        dims += (i ? " " : "") + std::string(m.signs[i] > 0 ? "+" : "-") + std::to_string(dimension(m.members[i]));
      if (o.pass) o.detail = dims;
    });
  }
}

// ---------------------------------------------------------------- spinc

void spinc_suite(Runner& r) {
  for (const auto& g : distinct_groups()) {
    r.check("torus_c_spinorial", group_name(g), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      SpincClassification c = classify(*SubgroupDatum::torus(RootDatum::build(g.label, g.lattice)));
      o.expect(c.is_c_spinorial, "T is not reported c-spinorial");
    });
  }
  r.check("spin7_not_c_spinorial", "B3:spin/so3xso4", [&](Sampler&, Outcome& o) {
    o.trials = 1;
    SpincClassification c = classify(*make_subgroup(RootDatum::build("B3", "spin"), "so3xso4"));
    o.expect(!c.is_c_spinorial && !c.is_spin, "Spin(7)/(SO(3)xSO(4)) reported c-spinorial");
  });

  for (const auto& z : zoo()) {
    ProblemPtr p = problem_for(z);
    const SubgroupDatum& sub = *p->sub();
    const std::size_t rank = p->rank();
    SpincClassification c = classify(sub);

    r.check("consistency", z.name(), [&](Sampler&, Outcome& o) {
      o.trials = 1;
      o.expect(!c.is_spin || c.is_c_spinorial, "spin but not c-spinorial");
      o.expect(c.is_spin == p->rho_m().is_integral(), "spin flag disagrees with rho_M in X(T)");
      if (c.character_lattice.rank() == 0) o.expect(c.is_c_spinorial == c.is_spin, "X(H) = 0 but c-spinorial != spin");
      o.expect(c.is_c_spinorial == c.gamma.has_value(), "witness presence disagrees with the verdict");
      if (sub.is_levi()) {
        o.expect(c.is_c_spinorial, "Levi subgroup not c-spinorial");
        if (c.gamma) o.expect(nu(sub, *c.gamma).is_zero(), "Levi witness has nu != 0");
      }
      std::vector<int> plus(sub.complement_positive().size(), 1);
      o.expect(almost_complex_character(sub, plus) == p->rho_m().scaled(Rational(2)),
               "sum of R_M^+ is not 2 rho_M");
    });

    if (!c.gamma) continue;
    const Weight gamma = *c.gamma;

    r.check("torsor", z.name(), [&](Sampler& s, Outcome& o) {
      for (const auto& chi : c.character_lattice.basis()) {
        ++o.trials;
        o.expect(is_c_spinorial(sub, gamma + chi.scaled(2)), "gamma + 2 chi is not c-spinorial", to_json(chi));
      }
      for (int t = 0; t < 20; ++t) {
        Weight e = s.weight(rank, 2);
        if (c.character_lattice.contains(e)) continue;
        ++o.trials;
        o.expect(!is_c_spinorial(sub, gamma + e.scaled(2)), "gamma + 2e c-spinorial for e outside X(H)", to_json(e));
      }
      o.expect(euler_class_for_character(sub, gamma) == p->euler().shifted(RationalWeight(gamma, 2)),
               "e_gamma != e^{gamma/2} e");
    });

    r.check("generator_shift", z.name(), [&](Sampler& s, Outcome& o) {
      const RationalWeight half(gamma, 2);
      for (int t = 0; t < 100; ++t) {
        ++o.trials;
        TorusElement x = s.torus_element(TwistClass(p->rho_m()), default_box(*p->g_scope()));
        TorusElement y = x.shifted(-half);
        o.expect(y.twist().is_zero(), "division by e^{gamma/2} is not untwisted", to_json(x));
        o.expect(y.shifted(half) == x, "division by e^{gamma/2} is not invertible", to_json(x));
      }
    });
  }
}

// ---------------------------------------------------------------- appendix B

TorusElement power(const TorusElement& x, int k) {
  TorusElement out = TorusElement::one(x.rank());
  for (int i = 0; i < k; ++i) out = multiply(out, x);
  return out;
}

// Same character written in the coordinates of another lattice (fundamental weights shared).
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

void appendix_b_suite(Runner& r) {
  DatumPtr spin4 = RootDatum::build("D2", "weight");
  DatumPtr so4 = RootDatum::build("D2", "vector");
  const std::size_t n = spin4->rank();
  auto fundamental = [&](std::size_t i) {
    std::vector<Rational> f(n, Rational(0));
    f[i] = Rational(1);
    return spin4->from_fundamental(RationalWeight::from(f));
  };
  const TorusElement x1 = irreducible_restriction(spin4->system(), fundamental(0));
  const TorusElement x2 = irreducible_restriction(spin4->system(), fundamental(1));

  r.check("generators", "D2", [&](Sampler&, Outcome& o) {
    o.trials = 2;
    o.expect(x1 == TorusElement::monomial(fundamental(0)) + TorusElement::monomial(-fundamental(0)),
             "x1 != e^w1 + e^-w1", to_json(x1));
    o.expect(x2 == TorusElement::monomial(fundamental(1)) + TorusElement::monomial(-fundamental(1)),
             "x2 != e^w2 + e^-w2", to_json(x2));
  });

  r.check("relations", "D2", [&](Sampler&, Outcome& o) {
    o.trials = 2;
    TorusElement y1 = multiply(x1, x1), y2 = multiply(x2, x2), y3 = multiply(x1, x2);
    o.expect(multiply(y1, y2) == multiply(y3, y3), "y1 y2 != y3^2");
    o.expect((multiply(y3, x1) - multiply(y1, x2)).is_zero(), "y3 x1 - y1 x2 != 0");
  });

  r.check("level_split", "D2", [&](Sampler&, Outcome& o) {
    const TwistClass odd(so4->from_fundamental(RationalWeight(Weight{1, 0})));
    o.expect(!odd.is_zero(), "w1 lies in the SO(4) lattice");
    o.expect(TwistClass(so4->from_fundamental(RationalWeight(Weight{0, 1}))) == odd, "w1 and w2 in different levels");
    for (int r1 = 0; r1 <= 3; ++r1) {
      for (int r2 = 0; r2 + r1 <= 4; ++r2) {
        ++o.trials;
        TorusElement m = multiply(power(x1, r1), power(x2, r2));
        TorusElement in_so4 = recoordinatize(m, *spin4, *so4);
        const bool even = (r1 + r2) % 2 == 0;
        const json tag{{"r1", r1}, {"r2", r2}};
        o.expect(in_so4.twist() == (even ? TwistClass(so4->rank()) : odd), "level differs from r1 + r2 mod 2", tag);
        GroupElement collected = collect_invariant(so4->roots(), in_so4);
        o.expect(expand(collected) == in_so4, "invariant collection does not reproduce the character", tag);
        GroupElement spin_collected = collect_invariant(spin4->roots(), m);
        o.expect(collected.size() == spin_collected.size(), "collections differ between Spin(4) and SO(4)", tag);
        for (const auto& [l, c] : spin_collected.sorted_terms()) {
          RationalWeight in = so4->from_fundamental(spin4->to_fundamental(l));
          o.expect(collected.twist().contains(in) && collected.coeff(in) == c,
                   "Spin(4) constituent missing from the SO(4) collection", tag);
        }
      }
    }
  });
}

void run_suite(const std::string& name, std::uint64_t seed, VerifyReport& report) {
  Runner r(name, seed, report);
  if (name == "weyl") weyl_suite(r);
  else if (name == "charring") charring_suite(r);
  else if (name == "induction") induction_suite(r);
  else if (name == "multiplets") multiplets_suite(r);
  else if (name == "spinc") spinc_suite(r);
  else if (name == "appendixB") appendix_b_suite(r);
  else if (name == "appendixC") appendix_c_suite(r);
}

} // namespace

VerifyReport verify(const std::string& suite, std::uint64_t seed) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    fail(ErrorCode::SchemaViolation, "/options/suite: unknown suite '" + suite + "'");
  VerifyReport report;
  report.suite = suite;
  report.seed = seed;
  if (suite == "all") {
    for (const auto& n : names) run_suite(n, seed, report);
  } else {
    run_suite(suite, seed, report);
  }
  return report;
}

} // namespace lietwist::cli
