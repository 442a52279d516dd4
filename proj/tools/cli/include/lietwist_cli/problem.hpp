// Problem documents: what to compute, on which (G, H), with which input.

#ifndef LIETWIST_CLI_PROBLEM_HPP_
#define LIETWIST_CLI_PROBLEM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lietwist_cli/json_io.hpp"

namespace lietwist::cli {

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"info",      "whset",   "induce", "branch",    "bwb",
                                              "multiplet", "pairing", "spinc",  "lefschetz", "verify"};
  return names;
}

struct SubgroupSpec {
  enum class Kind { Descriptor, Roots, Simple };
  Kind kind = Kind::Descriptor;
  std::string descriptor = "T";      // T, G, levi, preset name
  std::vector<std::size_t> indices;  // positive-root or simple-root indices
  // Descriptor string understood by make_subgroup.
  std::string str() const;
};

struct ProblemDocument {
  std::string command;
  std::string label = "A1";
  std::string lattice = "weight";
  SubgroupSpec subgroup;
  std::optional<RationalWeight> twist;  // sigma
  json input;                           // null, token string or element object
  json options = json::object();
  std::uint64_t seed = 0;
  std::uint64_t max_weyl_order = Limits{}.max_weyl_order;

  Limits limits() const;
  DatumPtr datum() const;
  SubgroupPtr subgroup_datum() const;
  // Normalized form; parse_problem(to_json().dump()) reproduces the document.
  json to_json() const;
};

// Throws SchemaViolation (message starts with the JSON pointer) or ParseError
// for malformed JSON. Root indices are validated against the declared group.
ProblemDocument parse_problem(const std::string& text);
ProblemDocument problem_from_json(const json& doc);

// "B3:spin" -> ("B3", "spin").
std::pair<std::string, std::string> split_group(const std::string& text);

} // namespace lietwist::cli

#endif
