#pragma once

#include <string>
#include <vector>

#include "theta/json_io.hpp"

namespace theta {

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<CheckLine> checks;

  void add(const std::string& name, bool ok, const std::string& detail = "");
};

// Exhaustive/property suites behind the `verify` command. Bounds are
// inclusive; all checks are exact.
SuiteReport verify_heisenberg(i64 max_k);
SuiteReport verify_orbits(int max_rank);
SuiteReport verify_brauer(int g, i64 n);
SuiteReport verify_cocycle(i64 max_h);
SuiteReport verify_multiplicativity(i64 trials, std::uint64_t seed);
SuiteReport verify_all(i64 max_k, int max_rank, int g, i64 n, std::uint64_t seed);

Json suite_report_to_json(const SuiteReport& r);

// JSON-level command implementations shared by the C API and (through it)
// the CLI.
Json classify_pairing_command(const Json& pairing);
Json heisenberg_command(const Json& group);
Json selfdual_orbits_command(int max_rank);
Json brauer_command(const Json& model, const Json* cls);
struct VerifyOptions {
  i64 max_k = 6;
  int max_rank = 2;
  int g = 1;
  i64 n = 4;
  std::uint64_t seed = 1;
};
Json verify_command(const std::string& suite, const VerifyOptions& options, bool& passed);

} // namespace theta
