#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace pvqe::vqe {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct OptimizerOptions {
  std::string method = "nelder-mead";
  /// Maximum objective evaluations.
  int budget = 1000;
  /// Edge length of the starting simplex.
  double initial_step = 0.5;
  /// A simplex whose vertices agree to within these tolerances is restarted
  /// around its best vertex while budget remains.
  double xtol = 1e-7;
  double ftol = 1e-12;
  /// Restarted simplices use this fraction of the previous step.
  double restart_shrink = 0.5;
  /// Stop after this many consecutive restarts that fail to improve.
  int stall_restarts = 3;
  /// Free coordinates; empty means all. Fixed ones keep their x0 value.
  std::vector<bool> mask;
  std::uint64_t seed = 0;
};

struct OptimizerResult {
  Eigen::VectorXd x;
  double f = 0.0;
  /// Objective value of every evaluation, in order.
  std::vector<double> trace;
  int evaluations = 0;
  int restarts = 0;
  std::string method;
};

/// Nelder-Mead with reflection 1, expansion 2, contraction 0.5 and shrink 0.5.
/// Returns the best point seen. Throws NumericalError, with the trace so far
/// in the message, when the objective returns a non-finite value.
OptimizerResult minimize(const Objective& f, const Eigen::VectorXd& x0, const OptimizerOptions& opts = {});

}  // namespace pvqe::vqe
