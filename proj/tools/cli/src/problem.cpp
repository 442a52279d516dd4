#include "lietwist_cli/problem.hpp"

#include <algorithm>

namespace lietwist::cli {

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> index_list(const json& j, const std::string& pointer, std::size_t bound) {
  if (!j.is_array()) schema_error(pointer, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = pointer + "/" + std::to_string(k);
    if (!j[k].is_number_integer()) schema_error(p, "expected an integer index");
    auto v = j[k].get<long long>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
      schema_error(p, "index " + std::to_string(v) + " out of range (" + std::to_string(bound) + " available)");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::uint64_t unsigned_at(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(pointer, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

} // namespace

std::string SubgroupSpec::str() const {
  switch (kind) {
  case Kind::Roots:
    return "roots:" + join_indices(indices);
  case Kind::Simple:
    return indices.empty() ? std::string("T") : "levi:" + join_indices(indices);
  case Kind::Descriptor:
    break;
  }
  return descriptor;
}

std::pair<std::string, std::string> split_group(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {text, "weight"};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

Limits ProblemDocument::limits() const {
  Limits l;
  l.max_weyl_order = max_weyl_order;
  return l;
}

DatumPtr ProblemDocument::datum() const { return RootDatum::build(label, lattice, limits()); }

SubgroupPtr ProblemDocument::subgroup_datum() const { return make_subgroup(datum(), subgroup.str()); }

json ProblemDocument::to_json() const {
  json doc;
  doc["command"] = command;
  doc["group"] = json{{"label", label}, {"lattice", lattice}};
  switch (subgroup.kind) {
  case SubgroupSpec::Kind::Descriptor:
    doc["subgroup"] = json{{"preset", subgroup.descriptor}};
    break;
  case SubgroupSpec::Kind::Roots:
    doc["subgroup"] = json{{"roots", subgroup.indices}};
    break;
  case SubgroupSpec::Kind::Simple:
    doc["subgroup"] = json{{"simple", subgroup.indices}};
    break;
  }
  doc["twist"] = twist ? cli::to_json(*twist) : json(nullptr);
  doc["input"] = input;
  doc["options"] = options;
  doc["seed"] = seed;
  doc["max_weyl_order"] = max_weyl_order;
  return doc;
}

ProblemDocument problem_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("", "expected an object");
  static const std::vector<std::string> known{"command", "group",   "subgroup", "twist",         "input",
                                              "options", "seed",    "max_weyl_order", "$schema"};
  for (const auto& [k, v] : doc.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) schema_error("/" + k, "unknown field");

  ProblemDocument p;
  if (doc.contains("command")) {
    if (!doc["command"].is_string()) schema_error("/command", "expected a string");
    p.command = doc["command"].get<std::string>();
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), p.command) == names.end())
      schema_error("/command", "unknown command '" + p.command + "'");
  }
  if (doc.contains("seed")) p.seed = unsigned_at(doc["seed"], "/seed");
  if (doc.contains("max_weyl_order")) p.max_weyl_order = unsigned_at(doc["max_weyl_order"], "/max_weyl_order");

  if (!doc.contains("group")) schema_error("/group", "missing");
  const json& g = doc["group"];
  if (g.is_string()) {
    std::tie(p.label, p.lattice) = split_group(g.get<std::string>());
  } else if (g.is_object()) {
    if (!g.contains("label") || !g["label"].is_string()) schema_error("/group/label", "expected a string");
    p.label = g["label"].get<std::string>();
    if (g.contains("lattice")) {
      if (!g["lattice"].is_string()) schema_error("/group/lattice", "expected a string");
      p.lattice = g["lattice"].get<std::string>();
    }
  } else {
    schema_error("/group", "expected a string or {label, lattice}");
  }
  DatumPtr datum = p.datum();
  const std::size_t rank = datum->rank();

  if (doc.contains("subgroup")) {
    const json& s = doc["subgroup"];
    if (s.is_string()) {
      p.subgroup.descriptor = s.get<std::string>();
    } else if (s.is_object()) {
      if (s.size() != 1) schema_error("/subgroup", "expected exactly one of preset, roots, simple");
      if (s.contains("preset")) {
        if (!s["preset"].is_string()) schema_error("/subgroup/preset", "expected a string");
        p.subgroup.descriptor = s["preset"].get<std::string>();
      } else if (s.contains("roots")) {
        p.subgroup.kind = SubgroupSpec::Kind::Roots;
        p.subgroup.indices = index_list(s["roots"], "/subgroup/roots", datum->system().positive_roots().size());
      } else if (s.contains("simple")) {
        p.subgroup.kind = SubgroupSpec::Kind::Simple;
        p.subgroup.indices = index_list(s["simple"], "/subgroup/simple", datum->system().num_simple());
      } else {
        schema_error("/subgroup", "expected one of preset, roots, simple");
      }
    } else {
      schema_error("/subgroup", "expected a string or object");
    }
  }
  if (doc.contains("twist") && !doc["twist"].is_null()) p.twist = rational_weight_from_json(doc["twist"], rank, "/twist");
  if (doc.contains("input")) {
    const json& in = doc["input"];
    if (in.is_object()) {
      if (in.contains("terms") && in["terms"].is_array() && !in["terms"].empty() && in["terms"][0].is_object() &&
          in["terms"][0].contains("highest_weight"))
        group_from_json(in, datum->roots(), "/input");
      else
        torus_from_json(in, rank, "/input");
    } else if (!in.is_string() && !in.is_null()) {
      schema_error("/input", "expected a token string or an element object");
    }
    p.input = in;
  }
  if (doc.contains("options")) {
    if (!doc["options"].is_object()) schema_error("/options", "expected an object");
    p.options = doc["options"];
  }
  return p;
}

ProblemDocument parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

} // namespace lietwist::cli
