#include "pvqe/vqe/ansatz.hpp"

#include <algorithm>
#include <set>

#include "pvqe/errors.hpp"

namespace pvqe::vqe {

namespace {

void check_shape(int n_qubits, const Coupling& coupling, int depth) {
  if (n_qubits < 1) throw ConfigError("ansatz needs at least one qubit");
  if (depth < 1) throw ConfigError("ansatz depth must be at least 1");
  if (coupling.empty() && n_qubits > 1) throw ConfigError("ansatz coupling is empty");
  for (auto [c, t] : coupling) {
    if (c < 0 || t < 0 || c >= n_qubits || t >= n_qubits || c == t) {
      throw ConfigError("coupling edge (" + std::to_string(c) + ", " + std::to_string(t) + ") is invalid");
    }
  }
}

int add_param(Ansatz& a, Wrapper w) {
  a.wrappers.push_back(w);
  return a.parameter_count() - 1;
}

void barrier(Ansatz& a) { a.instructions.push_back({InstructionKind::Barrier, {}, {}}); }

}  // namespace

std::string Ansatz::descriptor() const {
  std::string s = kind + " p=" + std::to_string(depth);
  if (pre_cr_phase) s += " pre-cr-phase";
  if (phase_layer) s += " phase-layer";
  return s;
}

Ansatz build_cnot_ansatz(int n_qubits, const Coupling& coupling, int depth) {
  check_shape(n_qubits, coupling, depth);
  Ansatz a;
  a.kind = "cnot";
  a.n_qubits = n_qubits;
  a.depth = depth;
  a.coupling = coupling;
  for (int layer = 0; layer <= depth; ++layer) {
    if (layer > 0) {
      for (auto [c, t] : coupling) a.instructions.push_back({InstructionKind::Cnot, {c, t}, {}});
      barrier(a);
    }
    for (int q = 0; q < n_qubits; ++q) {
      a.instructions.push_back({InstructionKind::Ry, {q}, {add_param(a, Wrapper::Identity)}});
    }
    if (layer < depth) barrier(a);
  }
  return a;
}

Ansatz build_pulse_ansatz(int n_qubits, const Coupling& coupling, int depth, bool pre_cr_phase, bool phase_layer) {
  check_shape(n_qubits, coupling, depth);
  Ansatz a;
  a.kind = "pulse";
  a.n_qubits = n_qubits;
  a.depth = depth;
  a.pre_cr_phase = pre_cr_phase;
  a.phase_layer = phase_layer;
  a.coupling = coupling;
  for (int layer = 0; layer <= depth; ++layer) {
    if (layer > 0) {
      for (auto [c, t] : coupling) {
        if (pre_cr_phase) {
          a.instructions.push_back({InstructionKind::VirtualZ, {t}, {add_param(a, Wrapper::Identity)}});
        }
        int dur = add_param(a, Wrapper::Duration);
        int amp = add_param(a, Wrapper::Amplitude);
        a.instructions.push_back({InstructionKind::Cr, {c, t}, {dur, amp}});
      }
      barrier(a);
    }
    for (int q = 0; q < n_qubits; ++q) {
      a.instructions.push_back({InstructionKind::RxPulse, {q}, {add_param(a, Wrapper::Amplitude)}});
    }
    if (layer == 0 && phase_layer) {
      for (int q = 0; q < n_qubits; ++q) {
        a.instructions.push_back({InstructionKind::VirtualZ, {q}, {add_param(a, Wrapper::Identity)}});
      }
    }
    if (layer < depth) barrier(a);
  }
  return a;
}

void validate(const Ansatz& a) {
  std::set<std::pair<int, int>> edges(a.coupling.begin(), a.coupling.end());
  std::vector<int> uses(a.wrappers.size(), 0);
  for (const auto& ins : a.instructions) {
    for (int q : ins.qubits) {
      if (q < 0 || q >= a.n_qubits) throw ConfigError("instruction qubit out of range");
    }
    std::size_t want_qubits = 1, want_params = 1;
    switch (ins.kind) {
      case InstructionKind::Barrier:
        want_qubits = want_params = 0;
        break;
      case InstructionKind::Cr:
        want_qubits = want_params = 2;
        break;
      case InstructionKind::Cnot:
        want_qubits = 2;
        want_params = 0;
        break;
      default:
        break;
    }
    if (ins.qubits.size() != want_qubits || ins.params.size() != want_params) {
      throw ConfigError("instruction has the wrong number of qubits or parameters");
    }
    if (want_qubits == 2 && !edges.count({ins.qubits[0], ins.qubits[1]})) {
      throw ConfigError("two-qubit instruction off the coupling map");
    }
    for (int p : ins.params) {
      if (p < 0 || p >= a.parameter_count()) throw ConfigError("parameter index out of range");
      ++uses[static_cast<std::size_t>(p)];
    }
    if (ins.kind == InstructionKind::Cr &&
        (a.wrappers[ins.params[0]] != Wrapper::Duration || a.wrappers[ins.params[1]] != Wrapper::Amplitude)) {
      throw ConfigError("CR needs one duration and one amplitude parameter");
    }
  }
  if (std::any_of(uses.begin(), uses.end(), [](int u) { return u != 1; })) {
    throw ConfigError("every parameter must be used exactly once");
  }
}

std::vector<int> parameters_with(const Ansatz& a, Wrapper w) {
  std::vector<int> idx;
  for (int i = 0; i < a.parameter_count(); ++i) {
    if (a.wrappers[static_cast<std::size_t>(i)] == w) idx.push_back(i);
  }
  return idx;
}

}  // namespace pvqe::vqe
