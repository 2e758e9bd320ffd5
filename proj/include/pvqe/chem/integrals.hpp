#pragma once

#include <vector>

#include <Eigen/Core>

#include "pvqe/chem/basis.hpp"
#include "pvqe/chem/geometry.hpp"

namespace pvqe::chem {

/// Dense rank-4 tensor over n orbitals, row-major in (p, q, r, s).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double operator()(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Atomic-orbital integrals. `eri` is in chemist notation (pq|rs).
struct AoIntegrals {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
  Tensor4 eri;
  double nuclear_repulsion = 0.0;

  Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
  std::size_t size() const { return static_cast<std::size_t>(overlap.rows()); }
};

/// Boys function of order zero. Throws ConfigError for x < 0.
double boys_f0(double x);

/// Closed-form s-type Gaussian integrals over normalized contracted shells.
/// Throws NumericalError when the overlap matrix is numerically singular.
AoIntegrals ao_integrals(const Geometry& g, const std::vector<BasisShell>& basis);

inline AoIntegrals ao_integrals(const Geometry& g) { return ao_integrals(g, sto3g_basis(g)); }

}  // namespace pvqe::chem
