#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pvqe::pulse {

/// Effective cross-resonance Hamiltonian for one directed qubit pair,
///   H = 1/2 (Z (x) B + I (x) C),  B = zi I + zx X + zy Y + zz Z,  C = ix X + iy Y + iz Z,
/// with the control as the left factor. Coefficients are linear frequencies in
/// Hz at unit drive amplitude.
struct CrModel {
  double zi = 0.0;
  double zx = 0.0;
  double zy = 0.0;
  double zz = 0.0;
  double ix = 0.0;
  double iy = 0.0;
  double iz = 0.0;

  int control = 0;
  int target = 1;
  std::string device;
  /// One-sigma uncertainties in Hz keyed by term name ("zx", "iy", ...).
  std::map<std::string, double> uncertainty;

  static const std::vector<std::string>& term_names();
  double term(std::string_view name) const;
  double& term(std::string_view name);
};

/// Parses fixture records. Each record starts at a `pair = (i, j)` line and
/// holds `nu_<term>_khz = value [± err]` lines; `device = name` applies to the
/// records that follow it. Throws ConfigError on malformed input.
std::vector<CrModel> parse_cr_fixture(std::string_view text);
std::vector<CrModel> load_cr_fixture(const std::filesystem::path& path);

/// Model for the directed pair (control, target); throws ConfigError if absent.
const CrModel& find_pair(const std::vector<CrModel>& models, int control, int target);
/// True if the pair is present in either direction.
bool has_edge(const std::vector<CrModel>& models, int a, int b);

std::string to_fixture_text(const CrModel& m);

}  // namespace pvqe::pulse
