#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "pvqe/pulse/cr_model.hpp"

namespace pvqe::pulse {

/// Target Bloch vectors under a constant CR drive, target starting in |0>.
struct TomographyTraces {
  std::vector<double> times;  ///< seconds
  /// bloch[c][k] is <X>, <Y>, <Z> of the target at times[k] with control |c>.
  std::array<std::vector<Eigen::Vector3d>, 2> bloch;
};

/// Exact two-qubit evolution under the unit-amplitude CR generator.
TomographyTraces tomography_traces(const CrModel& m, const std::vector<double>& times);

/// Longest span up to `t_max` (seconds) at which `count` evenly spaced samples
/// still give the faster conditional rotation of `m` four samples per period.
/// Evenly spaced samples below that rate alias and fit a wrong frequency.
double sampling_window(const CrModel& m, int count, double t_max);

/// `count` evenly spaced times on [0, t_max].
std::vector<double> linspace_times(double t_max, int count);

struct TomographyFit {
  CrModel model;
  /// Fitted rotation vectors (rad/s) for control |0> and |1>.
  std::array<Eigen::Vector3d, 2> omega;
  /// RMS deviation between fitted and measured Bloch components.
  double residual = 0.0;
};

/// Fits a constant-axis Bloch rotation per control state and combines the two
/// as zB = (B0 - B1) / 2, iB = (B0 + B1) / 2. zi is not observable and is 0.
/// Needs at least 12 time points; throws NumericalError when the RMS residual
/// exceeds `max_residual`.
TomographyFit fit_tomography(const TomographyTraces& traces, double max_residual = 1e-3);

/// CSV with header `time_s,x0,y0,z0,x1,y1,z1`.
void write_traces_csv(std::ostream& out, const TomographyTraces& traces);

}  // namespace pvqe::pulse
