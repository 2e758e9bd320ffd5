#pragma once

#include <vector>

#include <Eigen/Core>

namespace pvqe::sim {

inline constexpr int kMaxStateQubits = 12;

/// |0...0> on n qubits; qubit 0 is the least significant index bit.
Eigen::VectorXcd zero_state(int n_qubits);

int qubit_count(const Eigen::VectorXcd& state);

/// Applies a 1- or 2-qubit unitary in place. `qubits[0]` is the least
/// significant bit of the gate's own index, so a gate written as
/// control (x) target goes on {target, control}.
void apply(Eigen::VectorXcd& state, const Eigen::MatrixXcd& u, const std::vector<int>& qubits);

}  // namespace pvqe::sim
