#include "pvqe/qubitop/dense.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "pvqe/errors.hpp"

namespace pvqe::qubitop {

namespace {

void guard(int n) {
  if (n > kMaxDenseQubits) {
    throw ConfigError("dense operator limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
}

// P|b> = phase(b) |b ^ x>, with phase = i^{|x&z|} (-1)^{|b&z|}.
cplx base_phase(const PauliString& p) {
  static const cplx kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[std::popcount(p.x & p.z) % 4];
}

}  // namespace

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  guard(p.n);
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const cplx ph = base_phase(p);
  for (Eigen::Index b = 0; b < dim; ++b) {
    auto col = static_cast<std::uint32_t>(b);
    double sign = (std::popcount(col & p.z) % 2) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(col ^ p.x), b) = ph * sign;
  }
  return m;
}

Eigen::MatrixXcd to_matrix(const PauliSum& op) {
  guard(op.n_qubits());
  const Eigen::Index dim = Eigen::Index{1} << op.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : op.terms()) {
    const cplx ph = base_phase(p) * c;
    for (Eigen::Index b = 0; b < dim; ++b) {
      auto col = static_cast<std::uint32_t>(b);
      double sign = (std::popcount(col & p.z) % 2) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(col ^ p.x), b) += ph * sign;
    }
  }
  return m;
}

Eigen::VectorXcd apply_pauli(const PauliString& p, const Eigen::VectorXcd& state) {
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  if (state.size() != dim) throw ConfigError("state dimension does not match Pauli width");
  Eigen::VectorXcd out(dim);
  const cplx ph = base_phase(p);
  for (Eigen::Index b = 0; b < dim; ++b) {
    auto col = static_cast<std::uint32_t>(b);
    double sign = (std::popcount(col & p.z) % 2) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(col ^ p.x)) = ph * sign * state(b);
  }
  return out;
}

double pauli_expectation(const Eigen::VectorXcd& state, const PauliString& p) {
  return state.dot(apply_pauli(p, state)).real();
}

double pauli_expectation(const Eigen::VectorXcd& state, const PauliSum& op) {
  const Eigen::Index dim = Eigen::Index{1} << op.n_qubits();
  if (state.size() != dim) throw ConfigError("state dimension does not match operator width");
  cplx total = 0.0;
  for (const auto& [p, c] : op.terms()) total += c * state.dot(apply_pauli(p, state));
  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real()))) {
    throw NumericalError("expectation value has an imaginary part");
  }
  return total.real();
}

GroundState exact_ground(const PauliSum& op) {
  Eigen::MatrixXcd m = to_matrix(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  GroundState g{es.eigenvalues()(0), es.eigenvectors().col(0)};
  double residual = (m * g.vector - g.energy * g.vector).norm();
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * static_cast<double>(m.rows()));
  if (residual > 1e-8 * scale) throw NumericalError("ground-state residual too large");
  return g;
}

GroundState exact_ground_in_sector(const PauliSum& op, int n_alpha, int n_beta) {
  const int n = op.n_qubits();
  if (n % 2 != 0) throw ConfigError("spin sectors need an even qubit count");
  const std::uint32_t alpha_mask = (1u << (n / 2)) - 1;
  std::vector<Eigen::Index> basis;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    if (std::popcount(b & alpha_mask) == n_alpha && std::popcount(b & ~alpha_mask) == n_beta) basis.push_back(b);
  }
  if (basis.empty()) throw ConfigError("empty electron sector");
  const Eigen::MatrixXcd full = to_matrix(op);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = full(basis[i], basis[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  GroundState g{es.eigenvalues()(0), Eigen::VectorXcd::Zero(full.rows())};
  for (Eigen::Index i = 0; i < d; ++i) g.vector(basis[i]) = es.eigenvectors()(i, 0);
  return g;
}

}  // namespace pvqe::qubitop
