#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "handlecalc/json_io.hpp"

namespace hcalc {

// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitBudget = 4,
};

// The commands on parsed JSON documents. Each returns the document the
// command line prints.
struct ValidateResult {
  json document;
  bool valid = false;
};
ValidateResult validate_document(const json& input);
json stats_document(const json& input);
json bound_document(const json& input);
json plan_document(const json& input);

struct SimplifyRequest {
  std::string mode;  // weak, strong, parity, epsilon or simplified
  int epsilon = 1;
  SimplifyOptions options;
};
json simplify_document(const json& input, const SimplifyRequest& request);

// Accepts a trace or a report carrying one under "trace".
TraceVerdict verify_document(const json& input);

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcalc
