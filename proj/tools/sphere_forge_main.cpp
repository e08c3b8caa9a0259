#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sphereforge/execute.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sphere-forge: construct and verify A1-bundle threefolds "
               "{fV - gU = 1} over affine surfaces"};
  app.require_subcommand(1);

  std::string script_path;
  std::string emit = "text";
  std::string cert_out;
  sphereforge::ExecOptions options;

  CLI::App* run = app.add_subcommand("run", "run a script and report verdicts");
  run->add_option("script", script_path, "script file")->required();
  run->add_option("--emit", emit, "report format: text | json | both")
      ->check(CLI::IsMember({"text", "json", "both"}))
      ->capture_default_str();
  run->add_option("--gb-steps", options.gb_steps,
                  "Groebner pair-reduction budget")
      ->capture_default_str();
  run->add_option("--timeout", options.timeout_seconds,
                  "wall-clock budget in seconds")
      ->capture_default_str();
  run->add_option("--cert-out", cert_out,
                  "directory for re-checkable certificate scripts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : sphereforge::exit_usage;
  }

  if (!cert_out.empty()) options.cert_out_dir = cert_out;
  if (const char* order = std::getenv("SPHERE_FORGE_ORDER"))
    options.default_order = order;
  options.emit = emit == "json"   ? sphereforge::EmitMode::json
                 : emit == "both" ? sphereforge::EmitMode::both
                                  : sphereforge::EmitMode::text;

  std::ifstream file(script_path);
  if (!file) {
    std::cerr << "sphere-forge: cannot open " << script_path << "\n";
    return sphereforge::exit_usage;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  sphereforge::Script script;
  try {
    script = sphereforge::parse_script(buffer.str());
  } catch (const sphereforge::ScriptError& e) {
    std::cerr << script_path << ":" << e.loc.line << ":" << e.loc.column
              << ": error: " << e.what() << "\n";
    return sphereforge::exit_usage;
  }

  sphereforge::Report report;
  try {
    report = sphereforge::execute(script, options);
  } catch (const std::exception& e) {
    std::cerr << "sphere-forge: " << e.what() << "\n";
    return sphereforge::exit_usage;
  }

  if (options.emit != sphereforge::EmitMode::json)
    std::cout << report.to_text();
  if (options.emit != sphereforge::EmitMode::text)
    std::cout << report.to_json().dump(2) << "\n";
  return report.exit_code;
}
