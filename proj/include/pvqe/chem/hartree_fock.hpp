#pragma once

#include <vector>

#include <Eigen/Core>

#include "pvqe/chem/integrals.hpp"

namespace pvqe::chem {

struct ScfOptions {
  int max_iterations = 200;
  double density_tolerance = 1e-8;
  /// Density mixing factor switched on after `oscillation_limit` energy rises.
  double damping = 0.5;
  int oscillation_limit = 3;
  /// Extra iterations after convergence, stopped early at this density change.
  double polish_tolerance = 1e-14;
  int polish_iterations = 200;
};

struct ScfResult {
  Eigen::MatrixXd c_alpha;  ///< columns are MOs, C^T S C = 1
  Eigen::MatrixXd c_beta;
  Eigen::VectorXd eps_alpha;
  Eigen::VectorXd eps_beta;
  double energy = 0.0;  ///< total, including nuclear repulsion
  int n_alpha = 0;
  int n_beta = 0;
  int iterations = 0;  ///< iterations until density_tolerance was met
  bool restricted = true;
  bool damped = false;
  /// Energies of the accepted densities, starting with the core guess.
  std::vector<double> energy_trace;
};

/// Restricted SCF when n_alpha == n_beta, unrestricted otherwise.
/// Throws NumericalError when the density does not converge.
ScfResult hartree_fock(const AoIntegrals& ints, int n_alpha, int n_beta, const ScfOptions& opts = {});

}  // namespace pvqe::chem
