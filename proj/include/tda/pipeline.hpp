#pragma once

// Batch orchestration behind the command-line tool.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tda/io.hpp"

namespace tda {

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kInputError = 3, kComputationError = 4 };

struct RunConfig {
  std::string command;
  std::optional<std::string> input;  // CSV path; otherwise the annulus generator
  AnnulusSpec annulus;
  double p = 2.0;
  std::optional<double> scale;
  int max_dim = 2;
  int intervals = 6;
  double overlap = 0.35;
  int axis = 0;
  double cluster_radius = 0.15;
  std::optional<double> link_threshold;
  bool all_pairs = false;
  bool radius_axis = false;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

/// Every field, with defaults resolved; embedded in each JSON artifact.
nlohmann::json config_json(const RunConfig& config);

/// Names of the supported subcommands.
const std::vector<std::string>& commands();

struct Artifact {
  std::string suffix;  // file suffix appended to the --out stem for secondary outputs
  std::string content;
};

/// The rendered outputs of one run, primary artifact first. Throws the
/// library's error types on bad input or parameters.
std::vector<Artifact> execute(const RunConfig& config);

/// Runs `execute`, writes the primary artifact to --out (or `out`) and the
/// secondary ones next to it. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tda
