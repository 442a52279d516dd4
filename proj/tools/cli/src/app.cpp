#include "lietwist_cli/app.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lietwist/serialize.hpp"
#include "lietwist_cli/verify.hpp"

namespace lietwist::cli {

namespace {

std::string option_string(const ProblemDocument& doc, const std::string& key, const std::string& fallback) {
  if (!doc.options.contains(key)) return fallback;
  const json& v = doc.options[key];
  if (!v.is_string()) schema_error("/options/" + key, "expected a string");
  return v.get<std::string>();
}

RationalWeight option_weight(const ProblemDocument& doc, const std::string& key, std::size_t rank) {
  if (!doc.options.contains(key)) schema_error("/options/" + key, "missing");
  const json& v = doc.options[key];
  const std::string pointer = "/options/" + key;
  if (v.is_string()) {
    RationalWeight w;
    try {
      w = parse_rational_weight(v.get<std::string>());
    } catch (const Error& e) {
      schema_error(pointer, e.what());
    }
    if (w.size() != rank) schema_error(pointer, "expected " + std::to_string(rank) + " coordinates");
    return w;
  }
  return rational_weight_from_json(v, rank, pointer);
}

RationalWeight token_weight(const std::string& text, std::size_t rank) {
  RationalWeight w;
  try {
    w = parse_rational_weight(text);
  } catch (const Error& e) {
    schema_error("/input", e.what());
  }
  if (w.size() != rank) schema_error("/input", "expected " + std::to_string(rank) + " coordinates");
  return w;
}

bool is_group_object(const json& in) {
  return in.is_object() && in.contains("terms") && in["terms"].is_array() && !in["terms"].empty() &&
         in["terms"][0].is_object() && in["terms"][0].contains("highest_weight");
}

TorusElement torus_input(const ProblemDocument& doc, const InductionProblem& p, const std::string& fallback) {
  const std::size_t rank = p.rank();
  if (doc.input.is_object()) {
    if (is_group_object(doc.input)) return expand(group_from_json(doc.input, p.h_scope(), "/input"));
    return torus_from_json(doc.input, rank, "/input");
  }
  const std::string t = doc.input.is_string() ? doc.input.get<std::string>() : fallback;
  if (t == "1") return TorusElement::one(rank);
  if (t == "e^rhoG") return TorusElement::monomial(p.rho_g());
  if (t == "e^rhoM") return TorusElement::monomial(p.rho_m());
  if (t == "e^rhoH") return TorusElement::monomial(p.rho_h());
  if (t == "unit") return expand(GroupElement::irreducible(p.h_scope(), p.rho_m()));
  if (t == "dG") return p.d_g();
  if (t == "dH") return p.d_h();
  if (t == "euler") return p.euler();
  if (t == "hodge") return dualize(p.euler());
  if (t.rfind("e^", 0) == 0) return TorusElement::monomial(token_weight(t.substr(2), rank));
  if (t.rfind("vh:", 0) == 0) return expand(GroupElement::irreducible(p.h_scope(), token_weight(t.substr(3), rank)));
  if (t.rfind("vg:", 0) == 0) return expand(GroupElement::irreducible(p.g_scope(), token_weight(t.substr(3), rank)));
  schema_error("/input", "unknown input token '" + t + "'");
}

GroupElement group_input(const ProblemDocument& doc, const InductionProblem& p) {
  if (is_group_object(doc.input)) return group_from_json(doc.input, p.g_scope(), "/input");
  if (doc.input.is_string()) {
    const std::string t = doc.input.get<std::string>();
    if (t.rfind("vg:", 0) == 0) return GroupElement::irreducible(p.g_scope(), token_weight(t.substr(3), p.rank()));
  }
  return collect_invariant(p.g_scope(), torus_input(doc, p, "1"));
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json datum_info(const RootDatum& d) {
  const RootSystem& g = d.system();
  json roots = json::array();
  for (std::size_t i = 0; i < g.positive_roots().size(); ++i)
    roots.push_back(json{{"index", i},
                         {"root", to_json(g.positive_roots()[i])},
                         {"simple_coordinates", to_json(d.simple_coordinates()[i])},
                         {"coroot", to_json(g.positive_coroots()[i])}});
  json simple = json::array();
  for (std::size_t i : g.simple_indices()) simple.push_back(i);
  return json{{"label", d.label().str()},
              {"lattice", d.lattice_choice().str()},
              {"rank", d.rank()},
              {"semisimple_rank", d.semisimple_rank()},
              {"cartan_matrix", to_json(d.cartan_matrix())},
              {"basis_in_fundamental", to_json(d.basis_in_fundamental())},
              {"simple_root_indices", simple},
              {"positive_roots", roots},
              {"rho_G", to_json(g.rho())},
              {"rho_G_fundamental", to_json(d.to_fundamental(g.rho()))},
              {"weyl_order", d.weyl_order_formula()},
              {"presets", preset_names(d)}};
}

json diagnostics(const InductionProblem& p) {
  Pi1Report pi = p.datum().pi1();
  return json{{"W_G", p.weyl().group().order()},
              {"W_H", p.weyl().sub_group().order()},
              {"W^H", p.weyl().index()},
              {"rho_G", to_json(p.rho_g())},
              {"rho_H", to_json(p.rho_h())},
              {"rho_M", to_json(p.rho_m())},
              {"pi1", json{{"free_rank", pi.free_rank}, {"torsion", pi.torsion}, {"torsion_free", pi.torsion_free()}}}};
}

ProblemPtr build_problem(const ProblemDocument& doc) {
  SubgroupPtr sub = doc.subgroup_datum();
  if (doc.twist) {
    if (doc.twist->size() != sub->datum().rank()) schema_error("/twist", "wrong number of coordinates");
    return InductionProblem::build(sub, TwistClass(*doc.twist));
  }
  return InductionProblem::build(sub);
}

json run_info(const InductionProblem& p) {
  json j = datum_info(p.datum());
  const SubgroupDatum& s = *p.sub();
  json hroots = json::array();
  for (const auto& a : s.system().positive_roots()) hroots.push_back(to_json(a));
  json comp = json::array();
  for (const auto& a : s.complement_positive()) comp.push_back(to_json(a));
  j["subgroup"] = json{{"positive_roots", hroots},
                       {"complement_positive", comp},
                       {"is_levi", s.is_levi()},
                       {"is_torus", s.is_torus()},
                       {"is_full", s.is_full()}};
  return j;
}

json run_whset(const InductionProblem& p) {
  json reps = json::array();
  const WeylGroup& w = p.weyl().group();
  for (std::size_t r : p.weyl().reps().reps)
    reps.push_back(json{{"index", r}, {"length", w[r].length}, {"det", w[r].det}, {"matrix", to_json(w[r].matrix)}});
  return json{{"count", reps.size()}, {"representatives", reps}};
}

json run_induce(const ProblemDocument& doc, const InductionProblem& p) {
  const std::string kind = option_string(doc, "kind", "twisted");
  if (kind == "twisted") return to_json(induce_twisted_spinc(p, torus_input(doc, p, "unit")), "G");
  if (kind == "holomorphic")
    return to_json(induce_classical(p, ClassicalKind::Holomorphic, torus_input(doc, p, "1")), "G");
  if (kind == "spin") return to_json(induce_classical(p, ClassicalKind::Spin, torus_input(doc, p, "1")), "G");
  if (kind == "spinc") {
    std::optional<Weight> gamma;
    if (doc.options.contains("gamma")) {
      RationalWeight g = option_weight(doc, "gamma", p.rank());
      if (!g.is_integral()) schema_error("/options/gamma", "gamma must be integral");
      gamma = g.integral();
    } else {
      gamma = classify(*p.sub()).gamma;
    }
    return to_json(induce_classical(p, ClassicalKind::SpincWith, torus_input(doc, p, "1"), gamma), "G");
  }
  schema_error("/options/kind", "expected twisted, holomorphic, spin or spinc");
}

json run_multiplet(const ProblemDocument& doc, const InductionProblem& p) {
  TorusElement a = torus_input(doc, p, "e^rhoG");
  Multiplet m = multiplet(p, a);
  json members = json::array();
  const WeylGroup& w = p.weyl().group();
  for (std::size_t i = 0; i < m.members.size(); ++i)
    members.push_back(json{{"rep", m.reps[i]},
                           {"length", w[m.reps[i]].length},
                           {"sign", m.signs[i]},
                           {"element", to_json(m.members[i], "H")}});
  return json{{"source", to_json(m.source)},
              {"members", members},
              {"alternating_dimension_sum", alternating_dimension_sum(m)}};
}

json run_pairing(const ProblemDocument& doc, const InductionProblem& p) {
  const std::string tau = option_string(doc, "tau", "0");
  if (tau != "0" && tau != "rhoM") schema_error("/options/tau", "expected \"0\" or \"rhoM\"");
  const bool shifted = tau == "rhoM";
  auto [ba, bb] = standard_pairing_bases(p, shifted);
  PairingReport rep = pairing_report(p, shifted ? TwistClass(p.rho_m()) : TwistClass(p.rank()), ba, bb);
  json ja = json::array(), jb = json::array(), gram = json::array();
  for (const auto& e : rep.basis_a) ja.push_back(to_json(e));
  for (const auto& e : rep.basis_b) jb.push_back(to_json(e));
  for (const auto& row : rep.gram) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e, "G"));
    gram.push_back(r);
  }
  return json{{"tau", tau},
              {"basis_a", ja},
              {"basis_b", jb},
              {"gram", gram},
              {"determinant", to_json(rep.determinant)},
              {"is_unit", rep.is_unit}};
}

json run_spinc(const InductionProblem& p) {
  json j = to_json(classify(*p.sub()));
  j["is_levi"] = p.sub()->is_levi();
  return j;
}

json run_lefschetz(const ProblemDocument& doc, const InductionProblem& p) {
  const std::string which = option_string(doc, "euler", "dirac");
  if (which != "dirac" && which != "hodge") schema_error("/options/euler", "expected dirac or hodge");
  int trials = 20;
  if (doc.options.contains("trials")) {
    const json& t = doc.options["trials"];
    if (!t.is_number_integer() || t.get<int>() < 1) schema_error("/options/trials", "expected a positive integer");
    trials = t.get<int>();
  }
  const bool dirac = which == "dirac";
  TorusElement euler = dirac ? p.euler() : hodge_de_rham_euler(p);
  TorusElement a = torus_input(doc, p, dirac ? "unit" : "1");
  LefschetzReport rep = lefschetz_check(p, euler, a, trials, doc.seed);
  json samples = json::array();
  for (const auto& s : rep.samples)
    samples.push_back(json{{"angles", s.angles},
                           {"symbolic", complex_json(s.symbolic)},
                           {"fixed_point", complex_json(s.fixed_point)},
                           {"rel_error", s.rel_error}});
  return json{{"euler", which},
              {"symbolic", to_json(rep.symbolic, "G")},
              {"samples", samples},
              {"resamples", rep.resamples},
              {"max_rel_error", rep.max_rel_error},
              {"tolerance", LefschetzReport::kTolerance},
              {"pass", rep.pass()}};
}

} // namespace

json execute(const ProblemDocument& doc) {
  if (doc.command == "verify") return verify(option_string(doc, "suite", "all"), doc.seed).to_json();
  ProblemPtr p = build_problem(doc);
  const std::string& c = doc.command;
  if (c == "info") return run_info(*p);
  if (c == "whset") return run_whset(*p);
  if (c == "induce") return run_induce(doc, *p);
  if (c == "branch") return to_json(branch(*p, group_input(doc, *p)), "H");
  if (c == "bwb") return to_json(bwb_irreducible(*p, option_weight(doc, "mu", p->rank())), "G");
  if (c == "multiplet") return run_multiplet(doc, *p);
  if (c == "pairing") return run_pairing(doc, *p);
  if (c == "spinc") return run_spinc(*p);
  if (c == "lefschetz") return run_lefschetz(doc, *p);
  schema_error("/command", "unknown command '" + c + "'");
}

json result_document(const ProblemDocument& doc) {
  json out;
  out["problem"] = doc.to_json();
  out["result"] = execute(doc);
  if (doc.command != "verify") out["diagnostics"] = diagnostics(*build_problem(doc));
  return out;
}

namespace {

struct Flags {
  std::string group, lattice, subgroup, twist, input, problem;
  std::string kind, gamma, mu, tau, euler, suite;
  int trials = 0;
  std::uint64_t seed = 0, max_weyl_order = 0;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemDocument assemble(const std::string& command, const Flags& f, const CLI::App& sub) {
  json doc = json::object();
  if (!f.problem.empty()) {
    try {
      doc = json::parse(read_file(f.problem));
    } catch (const json::parse_error& e) {
      fail(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("", "expected an object");
  }
  doc["command"] = command;
  auto given = [&](const char* name) {
    const CLI::Option* o = sub.get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--group")) {
    auto [label, lattice] = split_group(f.group);
    doc["group"] = json{{"label", label}, {"lattice", given("--lattice") ? f.lattice : lattice}};
  } else if (given("--lattice")) {
    if (!doc.contains("group")) schema_error("/group", "missing");
    json g = doc["group"].is_string() ? json{{"label", split_group(doc["group"].get<std::string>()).first}} : doc["group"];
    g["lattice"] = f.lattice;
    doc["group"] = g;
  }
  if (!doc.contains("group") && command == "verify") doc["group"] = "A1";
  if (given("--subgroup")) doc["subgroup"] = f.subgroup;
  if (given("--twist")) {
    try {
      doc["twist"] = json(nullptr);
      RationalWeight t = parse_rational_weight(f.twist);
      doc["twist"] = to_json(t);
    } catch (const Error& e) {
      schema_error("/twist", e.what());
    }
  }
  if (given("--input")) {
    if (!f.input.empty() && f.input.front() == '{') {
      try {
        doc["input"] = json::parse(f.input);
      } catch (const json::parse_error& e) {
        schema_error("/input", std::string("malformed JSON: ") + e.what());
      }
    } else {
      doc["input"] = f.input;
    }
  }
  if (given("--seed")) doc["seed"] = f.seed;
  if (given("--max-weyl-order")) doc["max_weyl_order"] = f.max_weyl_order;
  json& opts = doc["options"];
  if (!opts.is_object()) opts = json::object();
  if (given("--kind")) opts["kind"] = f.kind;
  if (given("--gamma")) opts["gamma"] = f.gamma;
  if (given("--mu")) opts["mu"] = f.mu;
  if (given("--tau")) opts["tau"] = f.tau;
  if (given("--euler")) opts["euler"] = f.euler;
  if (given("--trials")) opts["trials"] = f.trials;
  if (given("--suite")) opts["suite"] = f.suite;
  return problem_from_json(doc);
}

std::string command_help(const std::string& name) {
  static const std::map<std::string, std::string> help{
      {"info", "Root datum, Weyl group orders, rho vectors and pi_1"},
      {"whset", "Minimal coset representatives W^H"},
      {"induce", "Induce an element of R(H) to R(G)"},
      {"branch", "Restrict an element of R(G) to R(H)"},
      {"bwb", "Borel-Weil-Bott image of an irreducible of H"},
      {"multiplet", "GKRS multiplet of a torus element"},
      {"pairing", "Gram matrix of the duality pairing"},
      {"spinc", "Invariant Spin^c-structures on G/H"},
      {"lefschetz", "Compare induction with the fixed-point sum"},
      {"verify", "Run the seeded identity checks"},
  };
  return help.at(name);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Spin^c-induction calculator for compact Lie groups"};
  app.require_subcommand(1);
  Flags f;
  for (const auto& name : command_names()) {
    CLI::App* s = app.add_subcommand(name, command_help(name));
    s->add_option("--group", f.group, "Series label, optionally with lattice (B3:spin)");
    s->add_option("--lattice", f.lattice, "weight, root, vector or gens:...");
    s->add_option("--subgroup", f.subgroup, "T, G, levi[:i,j], roots:i,j or a preset name");
    s->add_option("--twist", f.twist, "Central twist sigma, e.g. [1/2,0]");
    s->add_option("--input", f.input, "Input token (e^rhoG, unit, vh:[..], ...) or JSON element");
    s->add_option("--seed", f.seed, "Random seed");
    s->add_option("--max-weyl-order", f.max_weyl_order, "Weyl group enumeration cap");
    s->add_option("--problem", f.problem, "Problem document (JSON file)");
    s->add_flag("--timing", f.timing, "Report wall time in the output document");
    if (name == "induce") {
      s->add_option("--kind", f.kind, "twisted, holomorphic, spin or spinc");
      s->add_option("--gamma", f.gamma, "c-spinorial character for --kind spinc");
    }
    if (name == "bwb") s->add_option("--mu", f.mu, "H-dominant weight in sigma + [rho_M]")->required();
    if (name == "pairing") s->add_option("--tau", f.tau, "0 or rhoM");
    if (name == "lefschetz") {
      s->add_option("--euler", f.euler, "dirac or hodge");
      s->add_option("--trials", f.trials, "Number of torus points");
    }
    if (name == "verify") s->add_option("--suite", f.suite, "all, weyl, charring, induction, multiplets, spinc, appendixB, appendixC");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  const CLI::App* sub = app.get_subcommands().front();
  try {
    const auto start = std::chrono::steady_clock::now();
    ProblemDocument doc = assemble(sub->get_name(), f, *sub);
    json result = result_document(doc);
    if (f.timing)
      result["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << result.dump(2) << std::endl;
    return 0;
  } catch (const Error& e) {
    out << json{{"error", json{{"code", code_name(e.code())}, {"message", e.what()}}}}.dump(2) << std::endl;
    return 1;
  } catch (const std::exception& e) {
    out << json{{"error", json{{"code", code_name(ErrorCode::InternalInconsistency)}, {"message", e.what()}}}}.dump(2)
        << std::endl;
    return 1;
  }
}

} // namespace lietwist::cli
