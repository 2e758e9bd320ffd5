#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace pvqe::sim {

/// Per-qubit confusion matrices [[p(0|0), p(0|1)], [p(1|0), p(1|1)]]; columns
/// are the prepared state and sum to 1.
struct ReadoutModel {
  std::vector<Eigen::Matrix2d> confusion;

  int n_qubits() const { return static_cast<int>(confusion.size()); }
  /// Flip probabilities p(1|0) = eps0 and p(0|1) = eps1 on every qubit.
  static ReadoutModel uniform(int n_qubits, double eps0, double eps1);
  static ReadoutModel ideal(int n_qubits) { return uniform(n_qubits, 0.0, 0.0); }
};

/// Throws ConfigError unless entries lie in [0, 1] and columns sum to 1.
void validate(const ReadoutModel& rm);

/// Applies the tensor product of per-qubit matrices to a vector over 2^n
/// bitstrings (qubit 0 least significant).
Eigen::VectorXd apply_tensored(const std::vector<Eigen::Matrix2d>& mats, const Eigen::VectorXd& v);

/// Noisy outcome distribution for true probabilities `p`.
Eigen::VectorXd apply_confusion(const ReadoutModel& rm, const Eigen::VectorXd& p);

/// Inverse confusion applied to empirical frequencies. The result is a
/// quasi-probability vector, not clipped. Throws NumericalError when a
/// confusion matrix is singular.
Eigen::VectorXd mitigate_tensored(const ReadoutModel& rm, const Eigen::VectorXd& frequencies);
Eigen::VectorXd mitigate_tensored(const ReadoutModel& rm, const std::vector<std::uint64_t>& counts);

std::vector<Eigen::Matrix2d> inverse_matrices(const ReadoutModel& rm);

}  // namespace pvqe::sim
