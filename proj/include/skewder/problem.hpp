/**
 * File-driven front end: problem-file parsing, task execution and report
 * rendering. Owns the textual and JSON interchange formats; everything
 * here is deterministic, so identical inputs produce byte-identical
 * reports.
 */

#ifndef SKEWDER_PROBLEM_HPP
#define SKEWDER_PROBLEM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "skewder/fields.hpp"

namespace skewder {

struct RunOptions {
  bool json = false;
  int max_degree = 3;  // cap for cohomology task degrees
};

/**
 * Parses and runs a problem file. Exit status: 0 on success, 1 on parse
 * or validation failure, 2 when a theorem-level consistency check fails
 * (which signals a bug, not bad input).
 */
int run_problem_file(const std::string& path, const RunOptions& options,
                     std::ostream& out, std::ostream& err);

/** Same, from an in-memory document (used by tests and the runner). */
int run_problem_text(const std::string& text, const RunOptions& options,
                     std::ostream& out, std::ostream& err);

struct PaperExampleResult {
  std::string name;      // which worked example
  std::string expected;  // the claimed dimensions
  std::string computed;  // what the engine found
  bool pass = false;
};

/** Runs the built-in worked-example suite over the given field. */
std::vector<PaperExampleResult> paper_example_suite(const FieldSpec& field);

/** Prints the suite (text or JSON); exit 0, or 2 on any mismatch. */
int run_paper_examples(const FieldSpec& field, bool json, std::ostream& out,
                       std::ostream& err);

}  // namespace skewder

#endif  // SKEWDER_PROBLEM_HPP
