#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "pvqe/qubitop/pauli.hpp"
#include "pvqe/sim/readout.hpp"
#include "pvqe/vqe/bind.hpp"
#include "pvqe/vqe/optimizer.hpp"

namespace pvqe::vqe {

struct VqeOptions {
  /// Shots per measurement group; nullopt uses exact expectations.
  std::optional<std::uint64_t> shots;
  const sim::ReadoutModel* noise = nullptr;
  const sim::ReadoutModel* mitigation = nullptr;
  std::uint64_t seed = 0;
  /// Optimizations from points drawn uniformly from [0, pi]^k. The best run
  /// is kept.
  int restarts = 1;
  /// Extra optimization started here, run before the random ones.
  std::optional<Eigen::VectorXd> x0;
  /// Budget, simplex step and mask apply per optimization.
  OptimizerOptions optimizer{};
};

struct TracePoint {
  int eval = 0;
  double energy = 0.0;
  int duration = 0;  ///< samples
};

struct VqeResult {
  Eigen::VectorXd params;
  double energy = 0.0;
  std::vector<TracePoint> trace;
  int evaluations = 0;
  int duration = 0;
  std::uint64_t seed = 0;
  std::string method;
};

/// Uniform [0, pi]^k from the stream for (seed, restart).
Eigen::VectorXd random_parameters(int k, std::uint64_t seed, std::uint64_t restart = 0);

/// Energy of the bound ansatz state, sampled with a fresh stream per
/// evaluation index when `opts.shots` is set.
double evaluate_energy(const qubitop::PauliSum& h, const Binder& binder, const Eigen::VectorXd& theta,
                       const VqeOptions& opts, std::uint64_t evaluation = 0);

VqeResult vqe_minimize(const qubitop::PauliSum& h, const Binder& binder, const VqeOptions& opts = {});

}  // namespace pvqe::vqe
