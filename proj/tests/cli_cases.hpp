#pragma once

// The golden-file cases of the command-line tool: each case is run through
// run_cli and its document (and diagram, when --svg is given) compared with the
// checked-in files under tests/golden.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skein/cli.hpp"

namespace skein::testing {

struct CliCase {
  std::string name;
  std::vector<std::string> args;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  /// Contents of the --svg file, empty when the case writes none.
  std::string svg;
};

inline std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = text.find(from, pos)) != std::string::npos; pos += to.size())
    text.replace(pos, from.size(), to);
  return text;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<CliCase> load_cli_cases(const std::filesystem::path& file, const std::string& data_dir,
                                           const std::string& tmp_dir) {
  std::vector<CliCase> cases;
  std::ifstream in(file);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    CliCase c;
    words >> c.name;
    for (std::string w; words >> w;) c.args.push_back(replace_all(replace_all(w, "{data}", data_dir), "{tmp}", tmp_dir));
    cases.push_back(std::move(c));
  }
  return cases;
}

inline CliRun run_case(const CliCase& c) {
  std::vector<const char*> argv{"skein"};
  std::string svg_path;
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    argv.push_back(c.args[i].c_str());
    if (c.args[i] == "--svg" && i + 1 < c.args.size()) svg_path = c.args[i + 1];
  }
  if (!svg_path.empty()) std::filesystem::remove(svg_path);
  std::ostringstream out, err;
  CliRun run;
  run.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  if (!svg_path.empty()) run.svg = slurp(svg_path);
  return run;
}

}  // namespace skein::testing
