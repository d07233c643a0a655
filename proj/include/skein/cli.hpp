#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skein/field.hpp"

namespace skein {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitPrecondition = 3, kExitInvariant = 4 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  /// "q/p", "q" or "inf".
  std::string slope;
  /// Set by --coeff; otherwise the document's own tag, then QA.
  std::optional<FieldTag> field;
  /// Generator or element name for annihilate; the document's target when empty.
  std::string generator;
  bool verify = false;
  std::string svg_path;
  std::string out_path;
};

/// Runs one command and writes its document to out (or --out); diagnostics go
/// to err. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs a parsed configuration; library errors propagate as exceptions.
void run_command(const RunConfig& config, std::ostream& out);

}  // namespace skein
