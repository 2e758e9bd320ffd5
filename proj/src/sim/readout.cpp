#include "pvqe/sim/readout.hpp"

#include <cmath>

#include <Eigen/LU>

#include "pvqe/errors.hpp"

namespace pvqe::sim {

ReadoutModel ReadoutModel::uniform(int n_qubits, double eps0, double eps1) {
  ReadoutModel rm;
  Eigen::Matrix2d m;
  m << 1.0 - eps0, eps1, eps0, 1.0 - eps1;
  rm.confusion.assign(static_cast<std::size_t>(n_qubits), m);
  validate(rm);
  return rm;
}

void validate(const ReadoutModel& rm) {
  for (const auto& m : rm.confusion) {
    if ((m.array() < 0.0).any() || (m.array() > 1.0).any() || !m.allFinite()) {
      throw ConfigError("confusion matrix entries must lie in [0, 1]");
    }
    for (int c = 0; c < 2; ++c) {
      if (std::abs(m.col(c).sum() - 1.0) > 1e-12) throw ConfigError("confusion matrix column does not sum to 1");
    }
  }
}

Eigen::VectorXd apply_tensored(const std::vector<Eigen::Matrix2d>& mats, const Eigen::VectorXd& v) {
  const Eigen::Index dim = v.size();
  if (dim != (Eigen::Index{1} << mats.size())) throw ConfigError("vector length does not match qubit count");
  Eigen::VectorXd out = v;
  for (std::size_t q = 0; q < mats.size(); ++q) {
    const Eigen::Index bit = Eigen::Index{1} << q;
    const auto& m = mats[q];
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const double a = out(i), b = out(i | bit);
      out(i) = m(0, 0) * a + m(0, 1) * b;
      out(i | bit) = m(1, 0) * a + m(1, 1) * b;
    }
  }
  return out;
}

Eigen::VectorXd apply_confusion(const ReadoutModel& rm, const Eigen::VectorXd& p) {
  return apply_tensored(rm.confusion, p);
}

std::vector<Eigen::Matrix2d> inverse_matrices(const ReadoutModel& rm) {
  std::vector<Eigen::Matrix2d> inv;
  inv.reserve(rm.confusion.size());
  for (const auto& m : rm.confusion) {
    const double det = m.determinant();
    if (std::abs(det) < 1e-12) throw NumericalError("singular confusion matrix");
    inv.push_back(m.inverse());
  }
  return inv;
}

Eigen::VectorXd mitigate_tensored(const ReadoutModel& rm, const Eigen::VectorXd& frequencies) {
  return apply_tensored(inverse_matrices(rm), frequencies);
}

Eigen::VectorXd mitigate_tensored(const ReadoutModel& rm, const std::vector<std::uint64_t>& counts) {
  Eigen::VectorXd f(static_cast<Eigen::Index>(counts.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    f(static_cast<Eigen::Index>(i)) = static_cast<double>(counts[i]);
    total += static_cast<double>(counts[i]);
  }
  if (total <= 0) throw ConfigError("no counts to mitigate");
  return mitigate_tensored(rm, Eigen::VectorXd(f / total));
}

}  // namespace pvqe::sim
