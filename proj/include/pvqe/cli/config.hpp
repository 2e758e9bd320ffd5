#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pvqe::cli {

/// Every setting of one CLI run. Unset optionals are filled from per-command
/// defaults by resolve(); the resolved config is echoed to config.json and is
/// enough to repeat the run.
struct RunConfig {
  std::string command;
  std::string system = "h2";
  std::string ansatz = "none";  ///< none | cnot | pulse
  int depth = 1;
  std::string phases = "none";  ///< none | pre-cr | layer | both
  std::optional<std::uint64_t> shots;  ///< unset means exact
  std::uint64_t seed = 0;
  int budget = 1000;
  int restarts = 3;
  bool warm_start = true;
  std::string fixture;      ///< fixture file; empty picks the layout default
  std::string fixture_dir;  ///< directory for default fixtures
  std::string out = "out";
  bool gnuplot_compatible = false;

  // Geometry. Lengths in Angstrom.
  std::optional<double> distance;
  std::optional<double> side;
  std::optional<double> diagonal;
  std::optional<double> alpha;

  // Scan range and the first point of a warm-started scan.
  std::optional<double> from;
  std::optional<double> to;
  std::optional<double> step;
  std::optional<double> start;

  // Readout error injected in shot mode, and whether to mitigate it.
  double readout_eps = 0.0;
  bool mitigate = false;

  // cr-dynamics and tomography.
  std::vector<int> pair;
  double t_max_us = 4.0;
  int points = 161;

  // depth-study.
  std::vector<int> depths{1, 2, 3};
  std::vector<std::uint64_t> seeds{0, 1, 2};
};

nlohmann::json to_json(const RunConfig& c);
/// Overlays the keys present in `j` onto `base`. Unknown keys are a
/// ConfigError.
RunConfig merge_json(RunConfig base, const nlohmann::json& j);

/// Checks values and fills command-specific defaults. Throws ConfigError.
RunConfig resolve(RunConfig c);

/// Evenly spaced scan points from `from` to `to` inclusive.
std::vector<double> scan_points(double from, double to, double step);

}  // namespace pvqe::cli
