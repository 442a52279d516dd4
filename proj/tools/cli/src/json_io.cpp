#include "lietwist_cli/json_io.hpp"

namespace lietwist::cli {

void schema_error(const std::string& pointer, const std::string& what) {
  fail(ErrorCode::SchemaViolation, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

json to_json(const Weight& w) {
  json a = json::array();
  for (Int v : w) a.push_back(v);
  return a;
}

json to_json(const RationalWeight& w) {
  if (w.is_integral()) return to_json(w.integral());
  return json{{"num", to_json(w.numerators())}, {"den", w.den()}};
}

json to_json(const TwistClass& t) { return to_json(t.shift()); }

json to_json(const TorusElement& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.sorted_terms()) terms.push_back(json{{"coeff", c}, {"weight", to_json(a.exponent(w))}});
  return json{{"twist", to_json(a.twist())}, {"terms", terms}};
}

json to_json(const GroupElement& a, const std::string& scope_name) {
  json terms = json::array();
  Int total = 0;
  for (const auto& [l, c] : a.sorted_terms()) {
    Int d = irreducible_dimension(*a.scope(), l);
    total = add_checked(total, mul_checked(c, d));
    terms.push_back(json{{"coeff", c}, {"highest_weight", to_json(l)}, {"dimension", d}});
  }
  return json{{"scope", scope_name}, {"twist", to_json(a.twist())}, {"terms", terms}, {"dimension", total}};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

json to_json(const SpincClassification& c) {
  json xh = json::array();
  for (const auto& b : c.character_lattice.basis()) xh.push_back(to_json(b));
  json j{{"rho_M", to_json(c.rho_m)},
         {"is_spin", c.is_spin},
         {"is_c_spinorial", c.is_c_spinorial},
         {"gamma", c.gamma ? to_json(*c.gamma) : json(nullptr)},
         {"X_H_basis", xh},
         {"torsor_note", c.torsor_note}};
  return j;
}

namespace {

Int int_at(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) schema_error(pointer, "expected an integer");
  return j.get<Int>();
}

} // namespace

Weight weight_from_json(const json& j, std::size_t rank, const std::string& pointer) {
  if (!j.is_array()) schema_error(pointer, "expected an integer array");
  if (j.size() != rank) schema_error(pointer, "expected " + std::to_string(rank) + " coordinates");
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = int_at(j[i], pointer + "/" + std::to_string(i));
  return w;
}

RationalWeight rational_weight_from_json(const json& j, std::size_t rank, const std::string& pointer) {
  if (j.is_array()) {
    // integers or "p/q" strings
    if (j.size() != rank) schema_error(pointer, "expected " + std::to_string(rank) + " coordinates");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < rank; ++i) {
      const std::string p = pointer + "/" + std::to_string(i);
      if (j[i].is_number_integer()) c.push_back(Rational(j[i].get<Int>()));
      else if (j[i].is_string()) {
        try {
          c.push_back(Rational::parse(j[i].get<std::string>()));
        } catch (const Error&) {
          schema_error(p, "bad rational");
        }
      } else {
        schema_error(p, "expected an integer");
      }
    }
    return RationalWeight::from(c);
  }
  if (j.is_object()) {
    if (!j.contains("num")) schema_error(pointer + "/num", "missing");
    if (!j.contains("den")) schema_error(pointer + "/den", "missing");
    Weight n = weight_from_json(j["num"], rank, pointer + "/num");
    Int d = int_at(j["den"], pointer + "/den");
    if (d <= 0) schema_error(pointer + "/den", "denominator must be positive");
    return RationalWeight(n, d);
  }
  schema_error(pointer, "expected a weight");
}

TorusElement torus_from_json(const json& j, std::size_t rank, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "expected a torus element object");
  if (!j.contains("terms") || !j["terms"].is_array()) schema_error(pointer + "/terms", "expected an array");
  TorusElement out(rank);
  if (j.contains("twist")) out = TorusElement(rank, TwistClass(rational_weight_from_json(j["twist"], rank, pointer + "/twist")));
  bool first = !j.contains("twist");
  for (std::size_t k = 0; k < j["terms"].size(); ++k) {
    const std::string p = pointer + "/terms/" + std::to_string(k);
    const json& t = j["terms"][k];
    if (!t.is_object()) schema_error(p, "expected {coeff, weight}");
    if (!t.contains("coeff")) schema_error(p + "/coeff", "missing");
    if (!t.contains("weight")) schema_error(p + "/weight", "missing");
    Int c = int_at(t["coeff"], p + "/coeff");
    RationalWeight x = rational_weight_from_json(t["weight"], rank, p + "/weight");
    if (first) {
      out = TorusElement(rank, TwistClass(x));
      first = false;
    }
    if (!out.twist().contains(x)) schema_error(p + "/weight", "weight is not in the element's twist class");
    out.add_monomial(x, c);
  }
  return out;
}

GroupElement group_from_json(const json& j, const ScopePtr& scope, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "expected a group element object");
  if (!j.contains("terms") || !j["terms"].is_array()) schema_error(pointer + "/terms", "expected an array");
  const std::size_t rank = scope->rank();
  GroupElement out(scope, TwistClass(rank));
  if (j.contains("twist")) out = GroupElement(scope, TwistClass(rational_weight_from_json(j["twist"], rank, pointer + "/twist")));
  bool first = !j.contains("twist");
  for (std::size_t k = 0; k < j["terms"].size(); ++k) {
    const std::string p = pointer + "/terms/" + std::to_string(k);
    const json& t = j["terms"][k];
    if (!t.is_object() || !t.contains("coeff") || !t.contains("highest_weight"))
      schema_error(p, "expected {coeff, highest_weight}");
    Int c = int_at(t["coeff"], p + "/coeff");
    RationalWeight x = rational_weight_from_json(t["highest_weight"], rank, p + "/highest_weight");
    if (first) {
      out = GroupElement(scope, TwistClass(x));
      first = false;
    }
    if (!scope->is_dominant(x)) schema_error(p + "/highest_weight", "not dominant");
    if (!out.twist().contains(x)) schema_error(p + "/highest_weight", "not in the element's twist class");
    out.add(x, c);
  }
  return out;
}

} // namespace lietwist::cli
