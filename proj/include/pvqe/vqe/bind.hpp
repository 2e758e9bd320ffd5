#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pvqe/pulse/cnot_model.hpp"
#include "pvqe/pulse/cr_model.hpp"
#include "pvqe/pulse/pulse_shape.hpp"
#include "pvqe/pulse/schedule.hpp"
#include "pvqe/vqe/ansatz.hpp"

namespace pvqe::vqe {

/// Calibration data for the physical qubits an ansatz runs on.
struct Device {
  std::string name;
  std::vector<pulse::CrModel> models;
  /// Physical qubit for each logical qubit.
  std::vector<int> layout;
  double dt = pulse::kDefaultDt;
  pulse::DragCalibration drag{};
  pulse::CnotOptions cnot{};
};

struct BoundGate {
  std::string name;
  Eigen::MatrixXcd unitary;
  /// Logical qubits, least significant gate bit first.
  std::vector<int> qubits;
};

struct BoundCircuit {
  std::vector<BoundGate> gates;
  pulse::Schedule schedule;
};

/// Compiles an ansatz against a device. CR unitaries come from the device
/// models, CNOTs are ideal with durations from the echoed calibration, and
/// virtual-Z gates are exact zero-duration RZ rotations.
class Binder {
 public:
  Binder(Ansatz ansatz, Device device);

  const Ansatz& ansatz() const { return ansatz_; }
  const Device& device() const { return device_; }

  BoundCircuit bind(const Eigen::VectorXd& theta) const;
  /// Final state from |0...0>.
  Eigen::VectorXcd prepare(const Eigen::VectorXd& theta) const;
  /// Schedule makespan in samples.
  int duration(const Eigen::VectorXd& theta) const;

  /// Calibrated CNOT for a logical edge (CNOT ansatz only).
  const pulse::CnotCalibration& cnot_calibration(std::pair<int, int> edge) const;

 private:
  Ansatz ansatz_;
  Device device_;
  std::map<std::pair<int, int>, pulse::CrModel> cr_models_;
  std::map<std::pair<int, int>, pulse::CnotCalibration> cnots_;
};

/// Duration charged for an RY gate: two sqrt(X) pulses.
int ry_duration(const pulse::DragCalibration& drag);

}  // namespace pvqe::vqe
