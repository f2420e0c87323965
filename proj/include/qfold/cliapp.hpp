#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfold/cartan.hpp"

namespace qf {

// Parsed job configuration: an integer Cartan block, optional symmetrizers,
// weights as fundamental-weight coefficient vectors, and a depth window.
struct JobConfig {
  std::vector<std::vector<long>> cartan;
  std::optional<std::vector<long>> symmetrizers;
  std::vector<std::vector<long>> weights;
  long depth = 8;
};

// Plain UTF-8 key/value text with one explicit matrix block; no locale
// dependence.  Errors: ConfigError.
JobConfig parse_config_text(const std::string& text);
JobConfig load_config(const std::string& path);

struct RunOptions {
  std::string command;
  std::string config_path;
  std::string out_dir = ".";
  std::optional<long> depth; // overrides the config value
  int jobs = 1;
};

// Executes one command; writes report.json (and DOT files where the command
// produces graphs) into out_dir.  Returns the process exit code: 0 all checks
// pass, 1 a verification failed, 2 configuration problems.
int run_command(const RunOptions& opt);

} // namespace qf
