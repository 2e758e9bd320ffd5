#pragma once

#include <Eigen/Core>

#include "pvqe/qubitop/pauli.hpp"

namespace pvqe::qubitop {

/// Dense routines refuse operators wider than this.
inline constexpr int kMaxDenseQubits = 12;

/// Kronecker product of the label's letters; qubit 0 is the least significant
/// bit of the row/column index.
Eigen::MatrixXcd pauli_matrix(const PauliString& p);
inline Eigen::MatrixXcd pauli_matrix(std::string_view label) {
  return pauli_matrix(PauliString::from_label(label));
}

Eigen::MatrixXcd to_matrix(const PauliSum& op);

/// P|psi> without forming the matrix.
Eigen::VectorXcd apply_pauli(const PauliString& p, const Eigen::VectorXcd& state);

/// <psi|P|psi>, real for Hermitian P.
double pauli_expectation(const Eigen::VectorXcd& state, const PauliString& p);
double pauli_expectation(const Eigen::VectorXcd& state, const PauliSum& op);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXcd vector;
};

/// Lowest eigenpair from a dense Hermitian eigensolve.
GroundState exact_ground(const PauliSum& op);

/// Lowest eigenpair restricted to Jordan-Wigner basis states holding
/// `n_alpha` electrons on qubits [0, n/2) and `n_beta` on [n/2, n). The
/// returned vector lives in the full 2^n space.
GroundState exact_ground_in_sector(const PauliSum& op, int n_alpha, int n_beta);

}  // namespace pvqe::qubitop
