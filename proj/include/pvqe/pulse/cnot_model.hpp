#pragma once

#include <Eigen/Core>

#include "pvqe/pulse/cr_model.hpp"
#include "pvqe/pulse/pulse_shape.hpp"

namespace pvqe::pulse {

/// Echoed-CR CNOT built from a fixture: two GaussianSquare halves whose
/// phase-aligned ZX rotation totals pi/4, one X pulse on the control after
/// each half, and a Hadamard layer on both qubits around it when only the
/// reverse direction is calibrated.
struct CnotCalibration {
  int control = 0;
  int target = 1;
  bool reversed = false;
  int half_duration = 0;  ///< samples per CR half
  double amplitude = 0.0;
  /// Drive phase that moves the whole conditional rotation onto ZX.
  double drive_phase = 0.0;
  int x_duration = 160;
  int total_duration = 0;
};

struct CnotOptions {
  /// Largest CR amplitude the calibration may use.
  double max_amplitude = 1.0;
  double dt = kDefaultDt;
  DragCalibration drag{};
};

/// Shortest echoed CNOT on (control, target) allowed by `opts`. Uses the model
/// for the pair in either direction.
CnotCalibration calibrate_cnot(const std::vector<CrModel>& models, int control, int target,
                               const CnotOptions& opts = {});

/// Ideal CNOT with the control as the more significant bit.
Eigen::Matrix4cd cnot_matrix();

}  // namespace pvqe::pulse
