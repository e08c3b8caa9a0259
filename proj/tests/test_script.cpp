#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sphereforge/execute.hpp"

using namespace sphereforge;

namespace {

Report run(const std::string& text, ExecOptions options = {}) {
  return execute(parse_script(text), options);
}

const char* kFullScript = R"(# one statement of every kind
ring R = Q[x, y];
ideal I = x^2 - y, x*y - 1;
ideal J = x*y - 1, x^2 - y;
scheme A = 0;
scheme S = x^2 - y^3;
center C = (x, y) on A at (0, 0);
matrix M = [[0, 1], [1, 0]];
map F : A -> A = (y, x);
map G : A -> A = (y, x);
certificate K = (F, G);

groebner I;
member x^4 - y^2 in I;
radical-member x^3 - 1 in I;
certify-member x^2 - y in I with (1, 0);
dim I;
equal I J;
smooth A;
singular S;
support C;
build X = bundle(C);
ga-check X;
reschange C2 = C with M;
pair-iso C C2 via K;
brieskorn B = (2, 3, 7);
gm-check (2, 3, 7) center (1, 2);
diag-family W;
trivialize W;
fiber W at (1, -1/2);
)";

}  // namespace

TEST_CASE("parse examples") {
  auto script = parse_script("ring R = Q[x,y]; ideal I = x, y; dim I;");
  CHECK(script.statements.size() == 3);

  CHECK_THROWS_AS(parse_script("ideal I = x;"), ScriptError);  // no active ring
  CHECK_THROWS_AS(parse_script("ring R = Q[x,x];"), ScriptError);
  CHECK_THROWS_AS(parse_script("ring R = Q[x]; dim I;"), ScriptError);
  CHECK_THROWS_AS(parse_script("ring R = Q[x]; ideal R = x;"), ScriptError);
  CHECK_THROWS_AS(parse_script("ring R = Q[x]; smooth R;"), ScriptError);
  CHECK_THROWS_AS(parse_script("ring R = Q[x]; ideal I = 2x;"), ScriptError);

  try {
    parse_script("ring R = Q[x, y];\nideal I = x ++ y;");
    FAIL("expected ScriptError");
  } catch (const ScriptError& e) {
    CHECK(e.loc.line == 2);
  }
}

TEST_CASE("pretty print round trip") {
  auto script = parse_script(kFullScript);
  auto reparsed = parse_script(pretty_print(script));
  CHECK(ast_equal(script, reparsed));
}

TEST_CASE("full script executes with exit 0") {
  auto report = run(kFullScript);
  CHECK(report.exit_code == exit_ok);
  for (const auto& entry : report.entries) {
    CAPTURE(entry.command);
    CHECK((entry.status == "ok" || entry.status == "declared"));
  }
}

TEST_CASE("failed checks exit 1 but execution continues") {
  auto report = run(
      "ring R = Q[x, y];"
      "ideal I = x^2, y; ideal J = x, y;"
      "equal I J;"
      "member y in J;");
  CHECK(report.exit_code == exit_check_failed);
  REQUIRE(report.entries.size() == 5);
  CHECK(report.entries[3].status == "failed");
  CHECK(report.entries[4].status == "ok");  // still ran
}

TEST_CASE("budget exhaustion exits 2") {
  // A 1 ms wall-clock budget would work too but is race-prone on fast
  // machines; a zero-step budget exercises the same path deterministically.
  ExecOptions options;
  options.gb_steps = 0;
  auto report = run("brieskorn S = (2, 3, 7); singular S;", options);
  CHECK(report.exit_code == exit_budget);
  CHECK(report.entries[1].status == "indeterminate");
}

TEST_CASE("runtime usage errors exit 3 and stop the script") {
  // brieskorn parameter rejection is a failed check (exit 1)...
  auto rejected = run("brieskorn S = (2, 4, 6);");
  CHECK(rejected.exit_code == exit_check_failed);

  // ...while comparing ideals from different rings is a usage error
  auto report = run(
      "ring R = Q[x]; ideal I = x;"
      "ring R2 = Q[y]; ideal J = y;"
      "equal I J;"
      "dim I;");
  CHECK(report.exit_code == exit_usage);
  REQUIRE(report.entries.size() >= 5);
  CHECK(report.entries[4].status == "error");
  CHECK(report.entries.size() == 5);  // nothing after the error ran
}

TEST_CASE("machine report is deterministic modulo timing") {
  ExecOptions options;
  auto a = run(kFullScript, options).to_json(/*include_timing=*/false);
  auto b = run(kFullScript, options).to_json(/*include_timing=*/false);
  CHECK(a.dump() == b.dump());
  // timing fields exist in the full report and only there
  auto timed = run(kFullScript, options).to_json();
  CHECK(timed["commands"][0].contains("timing"));
  CHECK_FALSE(a["commands"][0].contains("timing"));
}

TEST_CASE("default order switch changes groebner output") {
  ExecOptions lex_options;
  lex_options.default_order = "lex";
  auto lex_report = run("ring R = Q[x, y]; ideal I = x^2 - y, x*y - 1; groebner I;",
                        lex_options);
  REQUIRE(lex_report.exit_code == exit_ok);
  auto basis = lex_report.entries[2].detail["basis"];
  std::vector<std::string> got = basis.get<std::vector<std::string>>();
  CHECK(got == std::vector<std::string>{"y^3 - 1", "x - y^2"});
}

TEST_CASE("persisted certificates replay cleanly") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sphere_forge_cert_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  ExecOptions options;
  options.cert_out_dir = dir.string();
  auto report = run(
      "ring R = Q[x, y];"
      "ideal I = x^2 - y, x*y - 1;"
      "member x^3 - 1 in I;"
      "scheme A = 0;"
      "center C = (x, y^2) on A at (0, 0);"
      "scheme A2 = 0;"
      "center D = (x^2, y) on A2 at (0, 0);"
      "map F : A -> A2 = (y, x);"
      "map G : A2 -> A = (y, x);"
      "certificate K = (F, G);"
      "pair-iso C D via K;",
      options);
  REQUIRE(report.exit_code == exit_ok);

  int replayed = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".sf") continue;
    std::ifstream in(entry.path());
    std::ostringstream text;
    text << in.rdbuf();
    auto replay = execute(parse_script(text.str()));
    CAPTURE(entry.path().string());
    CHECK(replay.exit_code == exit_ok);
    ++replayed;
  }
  CHECK(replayed == 2);
  fs::remove_all(dir);
}
