#include "pvqe/vqe/bind.hpp"

#include "pvqe/errors.hpp"
#include "pvqe/pulse/cr_dynamics.hpp"
#include "pvqe/pulse/wrappers.hpp"
#include "pvqe/sim/statevector.hpp"

namespace pvqe::vqe {

int ry_duration(const pulse::DragCalibration& drag) { return 2 * drag.duration; }

Binder::Binder(Ansatz ansatz, Device device) : ansatz_(std::move(ansatz)), device_(std::move(device)) {
  validate(ansatz_);
  if (static_cast<int>(device_.layout.size()) != ansatz_.n_qubits) {
    throw ConfigError("device layout has " + std::to_string(device_.layout.size()) + " qubits, ansatz needs " +
                      std::to_string(ansatz_.n_qubits));
  }
  for (const auto& ins : ansatz_.instructions) {
    if (ins.kind != InstructionKind::Cr && ins.kind != InstructionKind::Cnot) continue;
    const std::pair<int, int> edge{ins.qubits[0], ins.qubits[1]};
    const int pc = device_.layout[edge.first], pt = device_.layout[edge.second];
    if (ins.kind == InstructionKind::Cr && !cr_models_.count(edge)) {
      cr_models_.emplace(edge, pulse::find_pair(device_.models, pc, pt));
    }
    if (ins.kind == InstructionKind::Cnot && !cnots_.count(edge)) {
      cnots_.emplace(edge, pulse::calibrate_cnot(device_.models, pc, pt, device_.cnot));
    }
  }
}

const pulse::CnotCalibration& Binder::cnot_calibration(std::pair<int, int> edge) const {
  auto it = cnots_.find(edge);
  if (it == cnots_.end()) throw ConfigError("no CNOT on this edge");
  return it->second;
}

BoundCircuit Binder::bind(const Eigen::VectorXd& theta) const {
  if (theta.size() != ansatz_.parameter_count()) {
    throw ConfigError("expected " + std::to_string(ansatz_.parameter_count()) + " parameters, got " +
                      std::to_string(theta.size()));
  }
  BoundCircuit out{{}, pulse::Schedule(ansatz_.n_qubits)};
  for (const auto& ins : ansatz_.instructions) {
    switch (ins.kind) {
      case InstructionKind::Barrier:
        out.schedule.barrier();
        break;
      case InstructionKind::Ry:
        out.gates.push_back({"ry", pulse::ry_unitary(theta(ins.params[0])), ins.qubits});
        out.schedule.add("ry", ins.qubits, ry_duration(device_.drag));
        break;
      case InstructionKind::RxPulse: {
        const double amp = pulse::wrap_amplitude(theta(ins.params[0]));
        out.gates.push_back({"rx", pulse::rx_unitary(amp, device_.drag.amp_x), ins.qubits});
        out.schedule.add("rx", ins.qubits, device_.drag.duration);
        break;
      }
      case InstructionKind::VirtualZ:
        out.gates.push_back({"vz", pulse::rz_unitary(theta(ins.params[0])), ins.qubits});
        out.schedule.add("vz", ins.qubits, 0);
        break;
      case InstructionKind::Cr: {
        const auto& model = cr_models_.at({ins.qubits[0], ins.qubits[1]});
        const int dur = pulse::wrap_duration(theta(ins.params[0]));
        const double amp = pulse::wrap_amplitude(theta(ins.params[1]));
        auto shape = pulse::gaussian_square(dur, amp);
        // Control is the more significant bit of the CR unitary.
        out.gates.push_back({"cr", pulse::cr_unitary(model, shape, 0.0, device_.dt), {ins.qubits[1], ins.qubits[0]}});
        out.schedule.add("cr", ins.qubits, dur);
        break;
      }
      case InstructionKind::Cnot: {
        const auto& cal = cnots_.at({ins.qubits[0], ins.qubits[1]});
        out.gates.push_back({"cnot", pulse::cnot_matrix(), {ins.qubits[1], ins.qubits[0]}});
        out.schedule.add("cnot", ins.qubits, cal.total_duration);
        break;
      }
    }
  }
  return out;
}

Eigen::VectorXcd Binder::prepare(const Eigen::VectorXd& theta) const {
  auto circuit = bind(theta);
  Eigen::VectorXcd state = sim::zero_state(ansatz_.n_qubits);
  for (const auto& g : circuit.gates) sim::apply(state, g.unitary, g.qubits);
  return state;
}

int Binder::duration(const Eigen::VectorXd& theta) const { return pulse::schedule_duration(bind(theta).schedule); }

}  // namespace pvqe::vqe
