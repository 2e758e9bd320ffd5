#include "pvqe/pulse/cnot_model.hpp"

#include <cmath>
#include <numbers>

#include "pvqe/errors.hpp"

namespace pvqe::pulse {

CnotCalibration calibrate_cnot(const std::vector<CrModel>& models, int control, int target,
                               const CnotOptions& opts) {
  if (!(opts.max_amplitude > 0.0 && opts.max_amplitude <= 1.0)) {
    throw ConfigError("CNOT calibration amplitude must lie in (0, 1]");
  }
  CnotCalibration cal;
  cal.control = control;
  cal.target = target;
  const CrModel* m = nullptr;
  for (const auto& candidate : models) {
    if (candidate.control == control && candidate.target == target) m = &candidate;
  }
  if (!m) {
    m = &find_pair(models, target, control);
    cal.reversed = true;
  }
  const double nu = std::hypot(m->zx, m->zy);
  if (nu == 0.0) throw ConfigError("pair has no ZX interaction to build a CNOT from");
  cal.drive_phase = -std::atan2(m->zy, m->zx);

  // exp(-i pi/4 ZX) needs pi * nu * amp * area * dt = pi / 4 over both halves.
  const double total_area = 1.0 / (4.0 * nu * opts.max_amplitude * opts.dt);
  cal.half_duration = gaussian_square_duration_for_area(total_area / 2);
  cal.amplitude = 1.0 / (4.0 * nu * opts.dt * 2 * envelope_area(gaussian_square(cal.half_duration, 1.0)));
  cal.x_duration = opts.drag.duration;
  cal.total_duration = 2 * cal.half_duration + 2 * cal.x_duration + (cal.reversed ? 2 * cal.x_duration : 0);
  return cal;
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = u(1, 1) = 1.0;
  u(2, 3) = u(3, 2) = 1.0;
  return u;
}

}  // namespace pvqe::pulse
