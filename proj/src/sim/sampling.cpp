#include "pvqe/sim/sampling.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "pvqe/errors.hpp"
#include "pvqe/sim/statevector.hpp"

namespace pvqe::sim {

Rng make_rng(std::uint64_t seed, std::uint64_t group, std::uint64_t iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(group), static_cast<std::uint32_t>(group >> 32),
                    static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(iteration >> 32)};
  return Rng(seq);
}

Counts sample_counts(const Eigen::VectorXd& probabilities, std::uint64_t shots, Rng& rng) {
  if (shots == 0) throw ConfigError("shot count must be positive");
  Counts counts(static_cast<std::size_t>(probabilities.size()), 0);
  double remaining_mass = 0.0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities(i);
    if (!(p >= -1e-12)) throw NumericalError("negative outcome probability");
    remaining_mass += std::max(p, 0.0);
  }
  std::uint64_t remaining = shots;
  for (Eigen::Index i = 0; i < probabilities.size() && remaining > 0; ++i) {
    const double p = std::max(probabilities(i), 0.0);
    if (p <= 0.0) continue;
    const double q = std::min(1.0, p / remaining_mass);
    std::uint64_t k = remaining;
    if (q < 1.0) k = std::binomial_distribution<std::uint64_t>(remaining, q)(rng);
    counts[static_cast<std::size_t>(i)] = k;
    remaining -= k;
    remaining_mass -= p;
    if (remaining_mass <= 0.0) break;
  }
  // Round-off can leave a few shots unassigned; give them to the last outcome drawn.
  if (remaining > 0) {
    for (Eigen::Index i = probabilities.size() - 1; i >= 0; --i) {
      if (probabilities(i) > 0) {
        counts[static_cast<std::size_t>(i)] += remaining;
        break;
      }
    }
  }
  return counts;
}

Eigen::VectorXd measurement_probabilities(const Eigen::VectorXcd& state, const qubitop::PauliString& basis) {
  const int n = qubit_count(state);
  if (basis.n != n) throw ConfigError("measurement basis width does not match state");
  Eigen::VectorXcd rotated = state;
  const double r = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  Eigen::Matrix2cd h_sdg;
  h_sdg << r, std::complex<double>(0, -r), r, std::complex<double>(0, r);
  for (int q = 0; q < n; ++q) {
    const char c = basis.at(q);
    if (c == 'X') apply(rotated, h, {q});
    else if (c == 'Y') apply(rotated, h_sdg, {q});
  }
  return rotated.cwiseAbs2();
}

Counts sample_group(const Eigen::VectorXcd& state, const qubitop::MeasurementGroup& group, std::uint64_t shots,
                    const ReadoutModel* rm, Rng& rng) {
  Eigen::VectorXd p = measurement_probabilities(state, group.basis);
  if (rm) {
    if (rm->n_qubits() != group.basis.n) throw ConfigError("readout model width does not match state");
    p = apply_confusion(*rm, p);
  }
  return sample_counts(p, shots, rng);
}

ReadoutModel calibrate_readout(const ReadoutModel& truth, std::uint64_t shots, Rng& rng) {
  const int n = truth.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  ReadoutModel fitted;
  fitted.confusion.assign(static_cast<std::size_t>(n), Eigen::Matrix2d::Zero());
  for (int prepared = 0; prepared < 2; ++prepared) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
    p(prepared ? dim - 1 : 0) = 1.0;
    const Counts counts = sample_counts(apply_confusion(truth, p), shots, rng);
    for (int q = 0; q < n; ++q) {
      std::uint64_t ones = 0;
      for (Eigen::Index b = 0; b < dim; ++b)
        if ((b >> q) & 1) ones += counts[static_cast<std::size_t>(b)];
      const double p1 = static_cast<double>(ones) / static_cast<double>(shots);
      auto& m = fitted.confusion[static_cast<std::size_t>(q)];
      m(0, prepared) = 1.0 - p1;
      m(1, prepared) = p1;
    }
  }
  return fitted;
}

void write_counts_csv(std::ostream& out, const Counts& counts, int n_qubits) {
  out << "bitstring,count\n";
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] == 0) continue;
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q)
      if ((b >> q) & 1u) bits[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
    out << bits << ',' << counts[b] << '\n';
  }
}

}  // namespace pvqe::sim
