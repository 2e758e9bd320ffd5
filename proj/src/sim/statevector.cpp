#include "pvqe/sim/statevector.hpp"

#include <bit>
#include <complex>

#include "pvqe/errors.hpp"

namespace pvqe::sim {

Eigen::VectorXcd zero_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxStateQubits) throw ConfigError("qubit count out of range");
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  s(0) = 1.0;
  return s;
}

int qubit_count(const Eigen::VectorXcd& state) {
  const auto dim = static_cast<std::uint64_t>(state.size());
  if (dim == 0 || !std::has_single_bit(dim)) throw ConfigError("state dimension is not a power of two");
  return std::countr_zero(dim);
}

void apply(Eigen::VectorXcd& state, const Eigen::MatrixXcd& u, const std::vector<int>& qubits) {
  const int n = qubit_count(state);
  const std::size_t k = qubits.size();
  if (k < 1 || k > 2) throw ConfigError("only 1- and 2-qubit gates are supported");
  if (u.rows() != (1 << k) || u.cols() != (1 << k)) throw ConfigError("gate dimension does not match qubit count");
  for (int q : qubits) {
    if (q < 0 || q >= n) throw ConfigError("gate qubit index out of range");
  }
  if (k == 2 && qubits[0] == qubits[1]) throw ConfigError("duplicate gate qubit");

  const Eigen::Index dim = state.size();
  if (k == 1) {
    const Eigen::Index bit = Eigen::Index{1} << qubits[0];
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const std::complex<double> a = state(i), b = state(i | bit);
      state(i) = u(0, 0) * a + u(0, 1) * b;
      state(i | bit) = u(1, 0) * a + u(1, 1) * b;
    }
    return;
  }
  const Eigen::Index b0 = Eigen::Index{1} << qubits[0];
  const Eigen::Index b1 = Eigen::Index{1} << qubits[1];
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & (b0 | b1)) continue;
    const Eigen::Index idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    std::complex<double> in[4];
    for (int j = 0; j < 4; ++j) in[j] = state(idx[j]);
    for (int r = 0; r < 4; ++r) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
      state(idx[r]) = acc;
    }
  }
}

}  // namespace pvqe::sim
