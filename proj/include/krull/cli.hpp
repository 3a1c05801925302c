#pragma once

// Batch command surface of krullkit. Each command maps a JSON request to a
// JSON result; `run` adds argument parsing, the response envelope and the
// exit code.

#include <iosfwd>
#include <string>
#include <vector>

#include "krull/json_io.hpp"

namespace krull::cli {

using jsonio::json;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kSchema = 2,
  kPrecondition = 3,
  kExhausted = 4,
};

struct Outcome {
  json result;
  std::string status = "ok";  // ok | failed | inconclusive
  int exit_code = kOk;
};

Outcome cmd_classgroup(const json& req);
Outcome cmd_primes_in_class(const json& req, bool reverify);
Outcome cmd_check_irreducible(const json& req, bool reverify);
Outcome cmd_intersection_check(const json& req);
Outcome cmd_counterexample(const json& req);
Outcome cmd_divisor_theory_check(const json& req);

// Dispatches on req["command"] and wraps the outcome (or the error) in the
// response envelope. Never throws.
std::pair<json, int> execute(const json& req, bool reverify);

// argv-style entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace krull::cli
