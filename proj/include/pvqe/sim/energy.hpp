#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "pvqe/qubitop/grouping.hpp"
#include "pvqe/sim/readout.hpp"
#include "pvqe/sim/sampling.hpp"

namespace pvqe::sim {

struct EnergyEstimate {
  double energy = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;  ///< total over all groups; 0 in exact mode
};

struct SamplingOptions {
  /// Shots per group; nullopt evaluates the exact expectation.
  std::optional<std::uint64_t> shots;
  /// Readout error injected before sampling.
  const ReadoutModel* noise = nullptr;
  /// Confusion model inverted on the counts.
  const ReadoutModel* mitigation = nullptr;
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
};

/// Per-bitstring value of the group's share of the operator,
/// f(b) = sum_terms c * (-1)^{|b & support|}.
Eigen::VectorXd group_observable(const qubitop::PauliSum& op, const qubitop::MeasurementGroup& group);

/// Throws ConfigError unless every non-identity term of `op` sits in exactly
/// one group and every group member is a term of `op`.
void check_coverage(const qubitop::PauliSum& op, const std::vector<qubitop::MeasurementGroup>& groups);

/// Energy from one outcome distribution per group (frequencies, exact
/// probabilities, or mitigated quasi-probabilities). `shots` > 0 adds the
/// binomial standard error, propagated through `mitigation` when given.
EnergyEstimate energy_from_distributions(const qubitop::PauliSum& op,
                                         const std::vector<qubitop::MeasurementGroup>& groups,
                                         const std::vector<Eigen::VectorXd>& frequencies, std::uint64_t shots,
                                         const ReadoutModel* mitigation = nullptr);

/// Identity constant plus group estimates. Exact mode returns
/// pauli_expectation directly.
EnergyEstimate estimate_energy(const Eigen::VectorXcd& state, const qubitop::PauliSum& op,
                               const std::vector<qubitop::MeasurementGroup>& groups, const SamplingOptions& opts);

}  // namespace pvqe::sim
