#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "pvqe/pulse/cr_model.hpp"
#include "pvqe/pulse/pulse_shape.hpp"

namespace pvqe::pulse {

/// exp(-i h t) for Hermitian h.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t);

/// 2 pi * 1/2 (Z (x) B(phi) + I (x) C(phi)) in rad/s, control as the left
/// factor (the more significant bit). The drive phase rotates (zx, zy) and
/// (ix, iy) in their planes; the Z-axis terms do not move.
Eigen::Matrix4cd cr_generator(const CrModel& m, double phi);

/// Evolution under a drive with unit-amplitude area `area` (samples), real
/// signed amplitude folded into `amplitude`, and drive phase `phi`.
Eigen::Matrix4cd cr_unitary_area(const CrModel& m, double amplitude, double area, double phi, double dt);

/// exp(-i G(phi + arg amp) |amp| A dt) with A the unit-amplitude pulse area.
Eigen::Matrix4cd cr_unitary(const CrModel& m, const PulseShape& p, double phi, double dt = kDefaultDt);

/// X_c U(A/2, pi) X_c U(A/2, 0): the pulse area is split into two halves with
/// opposite drive sign and a control pi pulse after each.
Eigen::Matrix4cd echoed_cr_unitary_area(const CrModel& m, double amplitude, double area, double dt);
Eigen::Matrix4cd echoed_cr_unitary(const CrModel& m, const PulseShape& p, double dt = kDefaultDt);

/// First-order generator of the echo: only zx, zy and iz survive.
Eigen::Matrix4cd echo_kept_generator(const CrModel& m);

/// exp(-i pi a X / 2) with a = amplitude / amp_x. Throws ConfigError for |a| > 1.
Eigen::Matrix2cd rx_unitary(double amplitude, double amp_x = 1.0);
Eigen::Matrix2cd ry_unitary(double theta);
Eigen::Matrix2cd rz_unitary(double phi);

/// Populations of |control, target> basis states, index = 2 * control + target.
using Populations = std::array<double, 4>;

struct DynamicsPoint {
  int duration = 0;  ///< samples
  double time_s = 0.0;
  /// Indexed by the initial control state; target starts in |0>.
  std::array<Populations, 2> plain;
  std::array<Populations, 2> echoed;
  std::array<Populations, 2> zx_only;
};

/// Unit-amplitude GaussianSquare of each duration, with and without echo, and
/// with only the zx term retained.
std::vector<DynamicsPoint> cr_dynamics(const CrModel& m, const std::vector<int>& durations,
                                       double dt = kDefaultDt);

}  // namespace pvqe::pulse
