// The verify harness: seeded identity checks over the built-in datum zoo.

#ifndef LIETWIST_CLI_VERIFY_HPP_
#define LIETWIST_CLI_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lietwist_cli/json_io.hpp"

namespace lietwist::cli {

struct ZooPair {
  std::string label;
  std::string lattice;
  std::string subgroup;
  std::string name() const { return label + ":" + lattice + "/" + subgroup; }
};

// A1/T, A2/T, A2/levi, A1xA1/levi, B2/T, G2/a2long, B3:spin/so3xso4, C2/a1xa1, F4/b4.
const std::vector<ZooPair>& zoo();

struct CheckRecord {
  std::string suite;
  std::string check;
  std::string pair;
  bool pass = true;
  std::size_t trials = 0;
  std::string detail;
  json counterexample;  // null when passing
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::size_t failed() const;
  json to_json() const;
};

// weyl, charring, induction, multiplets, spinc, appendixB, appendixC (sorted).
const std::vector<std::string>& suite_names();

// suite is one of suite_names() or "all"; unknown names raise SchemaViolation.
VerifyReport verify(const std::string& suite, std::uint64_t seed);

// Deterministic per-check seed, independent of the standard library.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag);

} // namespace lietwist::cli

#endif
