#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "pvqe/qubitop/grouping.hpp"
#include "pvqe/sim/readout.hpp"

namespace pvqe::sim {

/// The one generator used for all sampling.
using Rng = std::mt19937_64;

/// Independent stream for (seed, group, iteration).
Rng make_rng(std::uint64_t seed, std::uint64_t group = 0, std::uint64_t iteration = 0);

/// Outcome counts indexed by bitstring (qubit 0 least significant).
using Counts = std::vector<std::uint64_t>;

/// Multinomial draw by successive conditional binomials.
Counts sample_counts(const Eigen::VectorXd& probabilities, std::uint64_t shots, Rng& rng);

/// Outcome probabilities after rotating each qubit into the basis letter of
/// `basis` (H for X, S^dagger then H for Y, nothing for Z or I).
Eigen::VectorXd measurement_probabilities(const Eigen::VectorXcd& state, const qubitop::PauliString& basis);

/// Samples one measurement group. A readout model, when given, distorts the
/// outcome distribution before the draw.
Counts sample_group(const Eigen::VectorXcd& state, const qubitop::MeasurementGroup& group, std::uint64_t shots,
                    const ReadoutModel* rm, Rng& rng);

/// Estimates per-qubit confusion matrices from all-zeros and all-ones
/// calibration runs of `shots` each, measured through `truth`.
ReadoutModel calibrate_readout(const ReadoutModel& truth, std::uint64_t shots, Rng& rng);

/// CSV `bitstring,count`; bitstrings print qubit n-1 first, zero counts skipped.
void write_counts_csv(std::ostream& out, const Counts& counts, int n_qubits);

}  // namespace pvqe::sim
