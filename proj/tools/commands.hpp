#pragma once

// Subcommands of the pu21 tool. Each returns a structured report and an exit
// status: 0 when every check passes, 1 on a numeric failure, 2 on bad input
// or a domain error.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pu21/boundary.hpp"

namespace pu21::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kNumericFailure = 1, kInputError = 2 };

struct Options {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int samples = 100;
  double fd_step = 1e-5;
};

struct QuadrupleDocument {
  std::optional<std::string> label;
  Quadruple points;
};

struct CommandResult {
  Json report;
  int exit_code = kPass;
};

/// Throws Error(ParseError) on malformed input or coincident points.
QuadrupleDocument parse_quadruple_document(const Json& doc);
QuadrupleDocument read_quadruple_document(const std::string& path);

/// Configuration problems, one message each; empty when the options are usable.
std::vector<std::string> validate(const Options& opts);

CommandResult cmd_invariants(const QuadrupleDocument& doc, const Options& opts);
CommandResult cmd_verify_geometry(const Options& opts);
CommandResult cmd_roundtrips(const Options& opts);

/// Error report for a library error raised while serving a command.
CommandResult error_result(const std::string& command, const std::exception& e,
                           const std::vector<BoundaryPoint>& points = {});

/// x rounded to 12 significant digits.
double sig12(double x);

/// Human-readable rendering: nested "key: value" lines, 12 significant digits.
std::string render_text(const Json& report);

}  // namespace pu21::cli
