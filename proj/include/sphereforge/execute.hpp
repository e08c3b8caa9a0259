#ifndef SPHEREFORGE_EXECUTE_HPP
#define SPHEREFORGE_EXECUTE_HPP

#include <nlohmann/json.hpp>

#include "sphereforge/script.hpp"

namespace sphereforge {

enum class EmitMode { text, json, both };

struct ExecOptions {
  std::uint64_t gb_steps = 2'000'000;
  double timeout_seconds = 300.0;
  EmitMode emit = EmitMode::text;
  std::optional<std::string> cert_out_dir;
  std::string default_order = "grevlex";  // grevlex | lex
};

// Exit code contract: 0 all checks passed, 1 some check failed, 2 budget
// exhausted, 3 usage error (parse failure, bad reference, bad arguments).
enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_budget = 2,
  exit_usage = 3
};

struct CommandEntry {
  std::size_t index = 0;
  std::string command;  // echo of the statement
  std::string status;   // ok | failed | indeterminate | error | declared
  nlohmann::json detail;
  std::uint64_t gb_steps_used = 0;
  double elapsed_ms = 0.0;
};

struct Report {
  std::vector<CommandEntry> entries;
  int exit_code = exit_ok;

  // Deterministic for fixed script and budgets when timing is excluded.
  nlohmann::json to_json(bool include_timing = true) const;
  std::string to_text() const;
};

Report execute(const Script& script, const ExecOptions& options = {});

}  // namespace sphereforge

#endif
