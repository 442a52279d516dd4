// JSON encoding of weights and ring elements. Integral weights are plain
// integer arrays; rational weights are {"num": [...], "den": n}.

#ifndef LIETWIST_CLI_JSON_IO_HPP_
#define LIETWIST_CLI_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "lietwist/charring.hpp"
#include "lietwist/multiplets.hpp"
#include "lietwist/spinc.hpp"

namespace lietwist::cli {

using json = nlohmann::ordered_json;

json to_json(const Weight& w);
json to_json(const RationalWeight& w);
json to_json(const TwistClass& t);
json to_json(const TorusElement& a);
// scope_name: "G" or "H"
json to_json(const GroupElement& a, const std::string& scope_name);
json to_json(const IntMatrix& m);
json to_json(const SpincClassification& c);

// Decoders report SchemaViolation with the JSON pointer of the bad field.
Weight weight_from_json(const json& j, std::size_t rank, const std::string& pointer);
RationalWeight rational_weight_from_json(const json& j, std::size_t rank, const std::string& pointer);
TorusElement torus_from_json(const json& j, std::size_t rank, const std::string& pointer);
GroupElement group_from_json(const json& j, const ScopePtr& scope, const std::string& pointer);

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what);

} // namespace lietwist::cli

#endif
