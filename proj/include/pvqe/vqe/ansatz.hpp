#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pvqe::vqe {

/// Directed coupling edges (control, target) in logical qubit indices.
using Coupling = std::vector<std::pair<int, int>>;

enum class Wrapper { Identity, Amplitude, Duration };

enum class InstructionKind { Ry, RxPulse, VirtualZ, Cr, Cnot, Barrier };

struct Instruction {
  InstructionKind kind = InstructionKind::Barrier;
  /// One qubit for rotations; (control, target) for Cr and Cnot.
  std::vector<int> qubits;
  /// Ry/RxPulse/VirtualZ: {angle or amplitude}. Cr: {duration, amplitude}.
  std::vector<int> params;
};

struct Ansatz {
  std::string kind;  ///< "cnot" or "pulse"
  int n_qubits = 0;
  int depth = 0;
  bool pre_cr_phase = false;
  bool phase_layer = false;
  Coupling coupling;
  std::vector<Instruction> instructions;
  std::vector<Wrapper> wrappers;

  int parameter_count() const { return static_cast<int>(wrappers.size()); }
  /// e.g. "pulse p=2 pre-cr-phase".
  std::string descriptor() const;
};

/// RealAmplitudes-style circuit: p+1 layers of RY on every qubit with a CNOT
/// ladder over `coupling` between layers.
Ansatz build_cnot_ansatz(int n_qubits, const Coupling& coupling, int depth);

/// p+1 layers of amplitude-parameterized X pulses with a CR ladder over
/// `coupling` between layers. `pre_cr_phase` adds a virtual-Z on the target
/// before each CR. `phase_layer` adds one virtual-Z per qubit after the first
/// pulse layer, so those phases follow the first n amplitudes in parameter
/// order.
Ansatz build_pulse_ansatz(int n_qubits, const Coupling& coupling, int depth, bool pre_cr_phase,
                          bool phase_layer = false);

/// Checks qubit ranges, contiguous parameter use, wrapper kinds and that every
/// two-qubit instruction runs on a coupling edge. Throws ConfigError.
void validate(const Ansatz& a);

/// Indices of parameters with the given wrapper.
std::vector<int> parameters_with(const Ansatz& a, Wrapper w);

}  // namespace pvqe::vqe
