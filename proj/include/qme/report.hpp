#pragma once

#include "qme/lambda.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qme {

using Json = nlohmann::ordered_json;

struct Request {
  std::string command;
  std::vector<std::string> args;
  Variant variant = Variant::LambdaGammaNu;
  Profile profile;
  std::uint64_t seed = 1;
  std::optional<std::size_t> order;
};

struct Outcome {
  Json report;
  bool pass = true;
};

// Runs one CLI command.  space may be null for commands that fix their own
// space (example-1d).  Errors propagate as qme::Error.
Outcome run_command(const Space* space, const Request& req);

std::string report_text(const Json& report);

}  // namespace qme
