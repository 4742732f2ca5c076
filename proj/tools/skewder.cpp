/**
 * Command-line front end.
 *
 *   skewder run <file> [--json] [--max-degree N]
 *   skewder check-paper-examples [--field Q|F<p>] [--json]
 */

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "skewder/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "skewder: skew derivations and twisted cohomology of incidence "
      "algebras of finite posets"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run the tasks in a problem file");
  std::string path;
  skewder::RunOptions options;
  run->add_option("file", path, "problem file (JSON)")->required();
  run->add_flag("--json", options.json, "emit a machine-readable JSON report");
  run->add_option("--max-degree", options.max_degree,
                  "largest cohomology degree a task may request")
      ->check(CLI::Range(0, 8));

  auto* paper = app.add_subcommand("check-paper-examples",
                                   "verify the built-in worked examples");
  std::string field_text = "Q";
  bool paper_json = false;
  paper->add_option("--field", field_text, "coefficient field, Q or F<p>");
  paper->add_flag("--json", paper_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed())
    return skewder::run_problem_file(path, options, std::cout, std::cerr);

  skewder::FieldSpec field;
  try {
    field = skewder::FieldSpec::parse(field_text);
  } catch (const skewder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return skewder::run_paper_examples(field, paper_json, std::cout, std::cerr);
}
