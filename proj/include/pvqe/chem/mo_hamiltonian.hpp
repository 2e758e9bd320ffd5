#pragma once

#include <string>

#include <Eigen/Core>

#include "pvqe/chem/hartree_fock.hpp"
#include "pvqe/chem/integrals.hpp"

namespace pvqe::chem {

/// Second-quantized Hamiltonian over spin orbitals
///   H = constant + sum h[p][q] a+_p a_q + 1/2 sum <pq|rs> a+_p a+_q a_s a_r
/// Spin orbitals use block order: all alpha orbitals, then all beta.
struct MoHamiltonian {
  Eigen::MatrixXd one_body;
  Tensor4 two_body;  ///< physicist notation <pq|rs>
  double constant = 0.0;
  int n_alpha = 0;
  int n_beta = 0;
  std::string convention = "physicist <pq|rs>; spin blocks alpha then beta";

  std::size_t n_spin_orbitals() const { return static_cast<std::size_t>(one_body.rows()); }
  std::size_t n_spatial() const { return n_spin_orbitals() / 2; }
};

/// Spin-orbital Hamiltonian with separate alpha and beta orbital sets.
/// Throws ConfigError on dimension mismatch or non-orthonormal orbitals.
MoHamiltonian mo_hamiltonian(const AoIntegrals& ints, const Eigen::MatrixXd& c_alpha,
                             const Eigen::MatrixXd& c_beta, int n_alpha, int n_beta);

inline MoHamiltonian mo_hamiltonian(const AoIntegrals& ints, const Eigen::MatrixXd& c, int n_alpha,
                                    int n_beta) {
  return mo_hamiltonian(ints, c, c, n_alpha, n_beta);
}

inline MoHamiltonian mo_hamiltonian(const AoIntegrals& ints, const ScfResult& scf) {
  return mo_hamiltonian(ints, scf.c_alpha, scf.c_beta, scf.n_alpha, scf.n_beta);
}

/// Symmetrically orthogonalized atomic orbitals S^{-1/2}.
Eigen::MatrixXd lowdin_orbitals(const AoIntegrals& ints);

}  // namespace pvqe::chem
