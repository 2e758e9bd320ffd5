#include "pvqe/vqe/vqe.hpp"

#include <numbers>
#include <random>

#include "pvqe/errors.hpp"
#include "pvqe/qubitop/grouping.hpp"
#include "pvqe/sim/energy.hpp"
#include "pvqe/sim/sampling.hpp"
#include "pvqe/sim/statevector.hpp"

namespace pvqe::vqe {

Eigen::VectorXd random_parameters(int k, std::uint64_t seed, std::uint64_t restart) {
  // Group index ~0 keeps these streams apart from the shot-sampling ones.
  auto rng = sim::make_rng(seed, ~std::uint64_t{0}, restart);
  std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
  Eigen::VectorXd x(k);
  for (auto& v : x) v = u(rng);
  return x;
}

namespace {

Eigen::VectorXcd run(const BoundCircuit& c, int n) {
  Eigen::VectorXcd state = sim::zero_state(n);
  for (const auto& g : c.gates) sim::apply(state, g.unitary, g.qubits);
  return state;
}

double energy_of(const Eigen::VectorXcd& state, const qubitop::PauliSum& h,
                 const std::vector<qubitop::MeasurementGroup>& groups, const VqeOptions& opts,
                 std::uint64_t evaluation) {
  sim::SamplingOptions so;
  so.shots = opts.shots;
  so.noise = opts.noise;
  so.mitigation = opts.mitigation;
  so.seed = opts.seed;
  so.iteration = evaluation;
  return sim::estimate_energy(state, h, groups, so).energy;
}

}  // namespace

double evaluate_energy(const qubitop::PauliSum& h, const Binder& binder, const Eigen::VectorXd& theta,
                       const VqeOptions& opts, std::uint64_t evaluation) {
  const auto groups = opts.shots ? qubitop::group_qubitwise(h) : std::vector<qubitop::MeasurementGroup>{};
  return energy_of(binder.prepare(theta), h, groups, opts, evaluation);
}

VqeResult vqe_minimize(const qubitop::PauliSum& h, const Binder& binder, const VqeOptions& opts) {
  const Ansatz& a = binder.ansatz();
  if (h.n_qubits() != a.n_qubits) {
    throw ConfigError("Hamiltonian has " + std::to_string(h.n_qubits()) + " qubits, ansatz " +
                      std::to_string(a.n_qubits));
  }
  if (opts.restarts < 0 || (opts.restarts == 0 && !opts.x0)) {
    throw ConfigError("at least one optimization run is required");
  }
  const auto groups = opts.shots ? qubitop::group_qubitwise(h) : std::vector<qubitop::MeasurementGroup>{};

  VqeResult result;
  result.seed = opts.seed;
  result.method = opts.optimizer.method;
  bool have_best = false;
  const int runs = opts.restarts + (opts.x0 ? 1 : 0);
  for (int run_index = 0; run_index < runs; ++run_index) {
    const int random_index = run_index - (opts.x0 ? 1 : 0);
    Eigen::VectorXd x0 = random_index < 0 ? *opts.x0 : random_parameters(a.parameter_count(), opts.seed, random_index);
    if (x0.size() != a.parameter_count()) throw ConfigError("initial point has the wrong length");
    Objective objective = [&](const Eigen::VectorXd& theta) {
      auto circuit = binder.bind(theta);
      const int duration = pulse::schedule_duration(circuit.schedule);
      const double e = energy_of(run(circuit, a.n_qubits), h, groups, opts,
                                 static_cast<std::uint64_t>(result.evaluations));
      ++result.evaluations;
      result.trace.push_back({result.evaluations, e, duration});
      if (!have_best || e < result.energy) {
        have_best = true;
        result.energy = e;
        result.params = theta;
        result.duration = duration;
      }
      return e;
    };
    OptimizerOptions oo = opts.optimizer;
    oo.seed = opts.seed + static_cast<std::uint64_t>(run_index);
    minimize(objective, x0, oo);
  }
  return result;
}

}  // namespace pvqe::vqe
