#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kv/checks.hpp"
#include "kv/input.hpp"

namespace kv {

struct RunOptions {
  unsigned depth = 3;
  bool machine = false;
  bool verbose = false;
};

// One requested check with its certificate (or a note when the operation
// itself could not run, e.g. Degenerate input).
struct CheckOutcome {
  std::string name;
  Certificate certificate;
  std::string note;        // non-empty when the operation failed outright
  bool ok() const { return note.empty() && certificate.holds(); }
};

struct Report {
  std::string command;
  std::string file;
  std::vector<std::string> arguments;
  std::string algebroid_summary;
  std::vector<CheckOutcome> checks;
  std::vector<NamedMatrix> derived;
  long long elapsed_ms = 0;

  int exit_code() const;
  // Human-readable text (includes timing) or byte-deterministic JSON
  // (timing omitted).
  std::string human(bool verbose) const;
  std::string machine() const;
};

// Dispatches one CLI command against a loaded document. Throws
// UnknownTensorName / VarianceMismatch / Error on argument misuse (exit 2
// territory); mathematical failures are reported inside the Report with
// exit code 1.
Report run_command(const InputDocument& doc, const std::string& command,
                   const std::vector<std::string>& args, const RunOptions& opts,
                   const std::string& file_echo);

}  // namespace kv
