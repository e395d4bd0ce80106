// pu21: invariant reports for boundary quadruples and the geometry
// verification suite.
//
//   pu21 invariants <file>   cross-ratios, Cartan invariants and configuration maps of one quadruple
//   pu21 verify-geometry     curvature tables and geometric residuals
//   pu21 roundtrips          cross-ratio identities, invariance and map round trips
//
// Exit status: 0 pass, 1 numeric failure, 2 input or domain error.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pu21/error.hpp"

namespace {

using pu21::cli::CommandResult;

int emit(const CommandResult& result, bool json) {
  if (json) {
    std::cout << result.report.dump(2) << '\n';
  } else {
    std::cout << pu21::cli::render_text(result.report);
    if (result.report.contains("warnings"))
      for (const auto& w : result.report["warnings"]) std::cerr << "warning: " << w.get<std::string>() << '\n';
  }
  if (result.report.contains("error") && !json)
    std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << '\n';
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and geometry checks for configurations of boundary points"};
  app.require_subcommand(1);
  app.fallthrough();

  pu21::cli::Options opts;
  bool json = false;
  app.add_option("--tol", opts.tol, "Gate for exact and closed-form checks")->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed of the sampling generator")->capture_default_str();
  app.add_option("--samples", opts.samples, "Random samples per sampled check")->capture_default_str();
  app.add_option("--fd-step", opts.fd_step, "Relative finite-difference step")->capture_default_str();
  app.add_flag("--json", json, "Emit the report as JSON");

  std::string input;
  auto* invariants = app.add_subcommand("invariants", "Report invariants of the quadruple in a JSON document");
  invariants->add_option("file", input, "Document {\"points\": [...], \"label\": ...}")->required();
  auto* verify = app.add_subcommand("verify-geometry", "Curvature tables and geometric residuals");
  auto* roundtrips = app.add_subcommand("roundtrips", "Cross-ratio identities and map round trips");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pu21::cli::kInputError;
  }

  if (const auto problems = pu21::cli::validate(opts); !problems.empty()) {
    for (const auto& p : problems) std::cerr << "error: " << p << '\n';
    return pu21::cli::kInputError;
  }

  if (invariants->parsed()) {
    pu21::cli::QuadrupleDocument doc{std::nullopt, {pu21::BoundaryPoint::infinity(), pu21::BoundaryPoint::infinity(),
                                                    pu21::BoundaryPoint::infinity(), pu21::BoundaryPoint::infinity()}};
    try {
      doc = pu21::cli::read_quadruple_document(input);
    } catch (const std::exception& e) {
      return emit(pu21::cli::error_result("invariants", e), json);
    }
    try {
      return emit(pu21::cli::cmd_invariants(doc, opts), json);
    } catch (const std::exception& e) {
      return emit(pu21::cli::error_result("invariants", e, {doc.points.begin(), doc.points.end()}), json);
    }
  }
  try {
    if (verify->parsed()) return emit(pu21::cli::cmd_verify_geometry(opts), json);
    if (roundtrips->parsed()) return emit(pu21::cli::cmd_roundtrips(opts), json);
  } catch (const std::exception& e) {
    return emit(pu21::cli::error_result(verify->parsed() ? "verify-geometry" : "roundtrips", e), json);
  }
  return pu21::cli::kInputError;
}
