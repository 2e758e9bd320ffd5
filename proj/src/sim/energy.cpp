#include "pvqe/sim/energy.hpp"

#include <bit>
#include <cmath>
#include <set>

#include "pvqe/errors.hpp"
#include "pvqe/qubitop/dense.hpp"

namespace pvqe::sim {

Eigen::VectorXd group_observable(const qubitop::PauliSum& op, const qubitop::MeasurementGroup& group) {
  const Eigen::Index dim = Eigen::Index{1} << op.n_qubits();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dim);
  for (const auto& term : group.members) {
    const double c = op.coefficient(term);
    const auto support = static_cast<Eigen::Index>(term.support());
    for (Eigen::Index b = 0; b < dim; ++b) {
      f(b) += (std::popcount(static_cast<std::uint64_t>(b & support)) % 2) ? -c : c;
    }
  }
  return f;
}

void check_coverage(const qubitop::PauliSum& op, const std::vector<qubitop::MeasurementGroup>& groups) {
  std::set<qubitop::PauliString> seen;
  for (const auto& g : groups) {
    for (const auto& m : g.members) {
      if (!op.terms().count(m)) throw ConfigError("group member " + m.label() + " is not a term of the operator");
      if (!seen.insert(m).second) throw ConfigError("term " + m.label() + " appears in two groups");
    }
  }
  for (const auto& [p, c] : op.terms()) {
    if (!p.is_identity() && !seen.count(p)) throw ConfigError("term " + p.label() + " is not covered by any group");
  }
}

EnergyEstimate energy_from_distributions(const qubitop::PauliSum& op,
                                         const std::vector<qubitop::MeasurementGroup>& groups,
                                         const std::vector<Eigen::VectorXd>& frequencies, std::uint64_t shots,
                                         const ReadoutModel* mitigation) {
  if (frequencies.size() != groups.size()) throw ConfigError("one distribution per group is required");
  std::vector<Eigen::Matrix2d> inv_t;
  if (mitigation) {
    for (const auto& m : inverse_matrices(*mitigation)) inv_t.push_back(m.transpose());
  }
  EnergyEstimate out;
  out.energy = op.identity_coefficient();
  double variance = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Eigen::VectorXd f = group_observable(op, groups[g]);
    // Mitigated estimate q.f equals p.(M^-T f), so the shot noise propagates
    // through g = M^-T f applied to the raw frequencies.
    const Eigen::VectorXd weights = mitigation ? apply_tensored(inv_t, f) : f;
    const Eigen::VectorXd& p = frequencies[g];
    if (p.size() != f.size()) throw ConfigError("distribution length does not match qubit count");
    const double mean = p.dot(weights);
    out.energy += mean;
    if (shots > 0) {
      const double second = p.dot(weights.cwiseAbs2());
      variance += std::max(0.0, second - mean * mean) / static_cast<double>(shots);
    }
  }
  out.std_error = std::sqrt(variance);
  out.shots = shots * groups.size();
  return out;
}

EnergyEstimate estimate_energy(const Eigen::VectorXcd& state, const qubitop::PauliSum& op,
                               const std::vector<qubitop::MeasurementGroup>& groups, const SamplingOptions& opts) {
  if (!opts.shots) {
    EnergyEstimate exact;
    exact.energy = qubitop::pauli_expectation(state, op);
    return exact;
  }
  check_coverage(op, groups);
  const std::uint64_t shots = *opts.shots;
  std::vector<Eigen::VectorXd> raw;
  raw.reserve(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    Rng rng = make_rng(opts.seed, g, opts.iteration);
    const Counts counts = sample_group(state, groups[g], shots, opts.noise, rng);
    Eigen::VectorXd f(static_cast<Eigen::Index>(counts.size()));
    for (std::size_t b = 0; b < counts.size(); ++b)
      f(static_cast<Eigen::Index>(b)) = static_cast<double>(counts[b]) / static_cast<double>(shots);
    raw.push_back(std::move(f));
  }
  return energy_from_distributions(op, groups, raw, shots, opts.mitigation);
}

}  // namespace pvqe::sim
