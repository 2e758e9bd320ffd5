#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pvqe/errors.hpp"
#include "pvqe/pulse/cr_dynamics.hpp"
#include "pvqe/pulse/wrappers.hpp"
#include "pvqe/qubitop/dense.hpp"
#include "pvqe/sim/statevector.hpp"
#include "pvqe/vqe/ansatz.hpp"
#include "pvqe/vqe/bind.hpp"
#include "pvqe/vqe/optimizer.hpp"
#include "pvqe/vqe/problems.hpp"
#include "pvqe/vqe/quartic_fit.hpp"
#include "pvqe/vqe/run_record.hpp"
#include "pvqe/vqe/scan.hpp"
#include "pvqe/vqe/vqe.hpp"

using namespace pvqe;
using namespace pvqe::vqe;

namespace {

Device device_for(int n) { return make_device(default_layout(n), PVQE_FIXTURE_DIR); }

Coupling line(int n) {
  Coupling c;
  for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return c;
}

}  // namespace

TEST(Ansatz, CnotParameterCounts) {
  EXPECT_EQ(build_cnot_ansatz(2, {{0, 1}}, 1).parameter_count(), 4);
  EXPECT_EQ(build_cnot_ansatz(6, default_layout(6).coupling, 1).parameter_count(), 12);
  EXPECT_EQ(build_cnot_ansatz(6, default_layout(6).coupling, 3).parameter_count(), 24);
}

TEST(Ansatz, PulseParameterCounts) {
  EXPECT_EQ(build_pulse_ansatz(2, {{0, 1}}, 2, true).parameter_count(), 12);
  EXPECT_EQ(build_pulse_ansatz(6, default_layout(6).coupling, 1, false).parameter_count(), 22);
  EXPECT_EQ(build_pulse_ansatz(8, line(8), 1, false).parameter_count(), 30);
  EXPECT_EQ(build_pulse_ansatz(8, line(8), 1, false, true).parameter_count(), 38);
}

TEST(Ansatz, PhaseLayerFollowsFirstAmplitudes) {
  auto a = build_pulse_ansatz(8, line(8), 1, false, true);
  auto phases = parameters_with(a, Wrapper::Identity);
  ASSERT_EQ(phases.size(), 8u);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(phases[i], 8 + i);
}

TEST(Ansatz, EveryCrHasDurationAndAmplitude) {
  auto a = build_pulse_ansatz(6, default_layout(6).coupling, 2, true);
  int crs = 0;
  for (const auto& ins : a.instructions) {
    if (ins.kind != InstructionKind::Cr) continue;
    ++crs;
    EXPECT_EQ(a.wrappers[ins.params[0]], Wrapper::Duration);
    EXPECT_EQ(a.wrappers[ins.params[1]], Wrapper::Amplitude);
  }
  EXPECT_EQ(crs, 10);
  EXPECT_NO_THROW(validate(a));
}

TEST(Ansatz, RejectsBadShapes) {
  EXPECT_THROW(build_cnot_ansatz(2, {}, 1), ConfigError);
  EXPECT_THROW(build_pulse_ansatz(2, {{0, 1}}, 0, false), ConfigError);
  EXPECT_THROW(build_pulse_ansatz(2, {{0, 2}}, 1, false), ConfigError);
  auto a = build_cnot_ansatz(2, {{0, 1}}, 1);
  a.instructions.push_back({InstructionKind::Ry, {0}, {0}});
  EXPECT_THROW(validate(a), ConfigError);
}

TEST(Bind, ZeroParametersGiveIdentityPulses) {
  Binder b(build_pulse_ansatz(2, {{0, 1}}, 1, false), device_for(2));
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(6);
  for (const auto& g : b.bind(theta).gates) {
    if (g.name == "rx") {
      EXPECT_LT((g.unitary - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-15);
    }
  }
}

TEST(Bind, CnotAnsatzAtZeroKeepsVacuum) {
  Binder b(build_cnot_ansatz(6, default_layout(6).coupling, 2), device_for(6));
  auto s = b.prepare(Eigen::VectorXd::Zero(18));
  EXPECT_NEAR(std::abs(s(0)), 1.0, 1e-14);
}

TEST(Bind, PulseStateMatchesDirectProduct) {
  auto dev = device_for(2);
  Binder b(build_pulse_ansatz(2, {{0, 1}}, 1, true), dev);
  Eigen::VectorXd th(7);
  th << 0.3, -1.1, 0.7, 0.4, 1.3, 0.9, 2.2;
  // Program order: rx0 rx1 | vz(target) cr | rx0 rx1.
  const auto& m = pulse::find_pair(dev.models, 0, 1);
  auto rx = [](double t) { return Eigen::MatrixXcd(pulse::rx_unitary(std::sin(t))); };
  auto cr = pulse::cr_unitary(m, pulse::gaussian_square(pulse::wrap_duration(th(3)), std::sin(th(4))), 0.0);
  // Qubit 1 (the CR target) is the more significant register bit.
  Eigen::MatrixXcd u = oracle::kron(rx(th(6)), rx(th(5))) * oracle::embed(cr, {1, 0}, 2) *
                       oracle::embed(pulse::rz_unitary(th(2)), {1}, 2) * oracle::kron(rx(th(1)), rx(th(0)));
  Eigen::VectorXcd expect = u.col(0);
  EXPECT_LT((b.prepare(th) - expect).norm(), 1e-12);
}

TEST(Bind, DurationDependsOnlyOnDurationParameters) {
  auto a = build_pulse_ansatz(6, default_layout(6).coupling, 1, false);
  Binder b(a, device_for(6));
  Eigen::VectorXd th = random_parameters(a.parameter_count(), 3);
  const int d = b.duration(th);
  EXPECT_EQ(d, b.duration(th));
  Eigen::VectorXd moved = th;
  for (int i : parameters_with(a, Wrapper::Amplitude)) moved(i) += 0.8;
  EXPECT_EQ(b.duration(moved), d);
  int expect = 2 * 160;
  for (int i : parameters_with(a, Wrapper::Duration)) expect += pulse::wrap_duration(th(i));
  // Lagos H3 coupling is a chain of shared qubits, so the CRs run back to back.
  EXPECT_EQ(d, expect);
}

TEST(Bind, CnotAnsatzOutlastsLongestPulseAnsatz) {
  auto cnot = build_cnot_ansatz(6, default_layout(6).coupling, 1);
  Binder bc(cnot, device_for(6));
  const int pulse_max = 2 * 160 + 5 * pulse::kMaxCrDuration;
  EXPECT_GT(bc.duration(Eigen::VectorXd::Zero(12)), pulse_max);
}

TEST(Optimizer, SphereConverges) {
  auto sphere = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
  OptimizerOptions o;
  o.budget = 500;
  auto r = minimize(sphere, Eigen::VectorXd::Ones(4), o);
  EXPECT_LT(r.f, 1e-6);
  EXPECT_LE(r.evaluations, 500);
}

TEST(Optimizer, RosenbrockConverges) {
  auto rosen = [](const Eigen::VectorXd& x) {
    return 100 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1 - x(0), 2);
  };
  OptimizerOptions o;
  o.budget = 2000;
  Eigen::VectorXd x0(2);
  x0 << -1.2, 1.0;
  auto r = minimize(rosen, x0, o);
  EXPECT_LT(r.f, 1e-3);
}

TEST(Optimizer, DeterministicAndShiftInvariant) {
  auto f = [](const Eigen::VectorXd& x) { return std::cos(3 * x(0)) + x.squaredNorm(); };
  auto g = [&](const Eigen::VectorXd& x) { return f(x) + 7.5; };
  OptimizerOptions o;
  o.budget = 300;
  o.seed = 4;
  Eigen::VectorXd x0 = Eigen::VectorXd::Constant(3, 0.9);
  auto a = minimize(f, x0, o), b = minimize(f, x0, o), c = minimize(g, x0, o);
  EXPECT_EQ(a.trace, b.trace);
  ASSERT_EQ(a.trace.size(), c.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_NEAR(c.trace[i] - a.trace[i], 7.5, 1e-12);
  EXPECT_LT((a.x - c.x).norm(), 1e-12);
}

TEST(Optimizer, BestIsRunningMinimum) {
  auto f = [](const Eigen::VectorXd& x) { return std::sin(x(0)) * std::cos(x(1)) + 0.1 * x.squaredNorm(); };
  OptimizerOptions o;
  o.budget = 150;
  auto r = minimize(f, Eigen::VectorXd::Constant(2, 1.0), o);
  EXPECT_EQ(r.f, *std::min_element(r.trace.begin(), r.trace.end()));
  EXPECT_EQ(static_cast<int>(r.trace.size()), r.evaluations);
  EXPECT_LE(r.evaluations, 150);
}

TEST(Optimizer, MaskFreezesCoordinates) {
  auto f = [](const Eigen::VectorXd& x) { return (x.array() - 2.0).square().sum(); };
  OptimizerOptions o;
  o.mask = {true, false, true};
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(3);
  auto r = minimize(f, x0, o);
  EXPECT_EQ(r.x(1), 0.0);
  EXPECT_NEAR(r.x(0), 2.0, 1e-3);
  EXPECT_NEAR(r.x(2), 2.0, 1e-3);
}

TEST(Optimizer, RejectsNonFiniteAndBadBudget) {
  auto f = [](const Eigen::VectorXd& x) { return x(0) > 0.2 ? std::nan("") : x(0); };
  EXPECT_THROW(minimize(f, Eigen::VectorXd::Zero(1)), NumericalError);
  OptimizerOptions o;
  o.budget = 0;
  EXPECT_THROW(minimize(f, Eigen::VectorXd::Zero(1), o), ConfigError);
}

TEST(Problems, H2IsParityReduced) {
  auto p = make_problem(chem::H2Spec{0.74});
  EXPECT_EQ(p.mapping, "parity-reduced");
  EXPECT_EQ(p.hamiltonian.n_qubits(), 2);
  EXPECT_EQ(p.hamiltonian.size(), 5u);
  EXPECT_LT(p.fci_energy, p.hf_energy);
  EXPECT_NEAR(p.fci_energy, fci_energy(chem::H2Spec{0.74}), 1e-9);
}

TEST(Problems, H3SectorGroundIsGlobal) {
  auto p = make_problem(chem::H3Spec{40, 1.43});
  EXPECT_EQ(p.hamiltonian.n_qubits(), 6);
  EXPECT_LT(p.fci_energy, p.hf_energy);
  EXPECT_NEAR(p.fci_energy, qubitop::exact_ground(p.hamiltonian).energy, 1e-9);
}

TEST(Vqe, CnotAnsatzReachesFciOnH2) {
  Binder b(build_cnot_ansatz(2, {{0, 1}}, 1), device_for(2));
  for (double d : {0.5, 0.74, 2.0}) {
    auto p = make_problem(chem::H2Spec{d});
    VqeOptions o;
    o.restarts = 3;
    o.seed = 2;
    o.optimizer.budget = 800;
    auto r = vqe_minimize(p.hamiltonian, b, o);
    EXPECT_LT(std::abs(r.energy - p.fci_energy), 1e-4) << d;
    for (const auto& t : r.trace) EXPECT_GE(t.energy, p.fci_energy - 1e-9);
  }
}

TEST(Vqe, ResultIsConsistentWithTrace) {
  auto a = build_pulse_ansatz(2, {{0, 1}}, 1, false);
  Binder b(a, device_for(2));
  auto p = make_problem(chem::H2Spec{0.74});
  VqeOptions o;
  o.seed = 5;
  o.optimizer.budget = 200;
  auto r = vqe_minimize(p.hamiltonian, b, o);
  double best = r.trace.front().energy;
  for (const auto& t : r.trace) best = std::min(best, t.energy);
  EXPECT_EQ(r.energy, best);
  EXPECT_EQ(r.duration, b.duration(r.params));
  EXPECT_EQ(r.evaluations, static_cast<int>(r.trace.size()));
  EXPECT_NEAR(evaluate_energy(p.hamiltonian, b, r.params, o), r.energy, 1e-12);
}

TEST(Vqe, ShotModeIsSeeded) {
  Binder b(build_cnot_ansatz(2, {{0, 1}}, 1), device_for(2));
  auto p = make_problem(chem::H2Spec{0.74});
  VqeOptions o;
  o.shots = 4096;
  o.seed = 9;
  o.optimizer.budget = 60;
  auto r1 = vqe_minimize(p.hamiltonian, b, o), r2 = vqe_minimize(p.hamiltonian, b, o);
  ASSERT_EQ(r1.trace.size(), r2.trace.size());
  for (std::size_t i = 0; i < r1.trace.size(); ++i) EXPECT_EQ(r1.trace[i].energy, r2.trace[i].energy);
}

TEST(Vqe, RandomInitialPointsInRange) {
  auto x = random_parameters(50, 1, 2);
  EXPECT_GE(x.minCoeff(), 0.0);
  EXPECT_LE(x.maxCoeff(), std::numbers::pi);
  EXPECT_NE((x - random_parameters(50, 1, 3)).norm(), 0.0);
}

TEST(Scan, WarmStartCarriesParameters) {
  Binder b(build_cnot_ansatz(2, {{0, 1}}, 1), device_for(2));
  ScanOptions so;
  so.vqe.optimizer.budget = 300;
  so.vqe.seed = 3;
  auto first = scan({0.74}, [](double d) { return chem::H2Spec{d}; }, b, so);
  // With a one-evaluation budget and no random runs the next point only
  // evaluates the carried parameters.
  so.initial = first.front().result.params;
  so.vqe.restarts = 0;
  so.vqe.optimizer.budget = 1;
  auto next = scan({0.8}, [](double d) { return chem::H2Spec{d}; }, b, so);
  auto p = make_problem(chem::H2Spec{0.8});
  EXPECT_NEAR(next.front().result.energy,
              evaluate_energy(p.hamiltonian, b, first.front().result.params, so.vqe), 1e-14);
}

TEST(Scan, ColdStartSeedsEachPoint) {
  Binder b(build_cnot_ansatz(2, {{0, 1}}, 1), device_for(2));
  ScanOptions so;
  so.warm_start = false;
  so.vqe.optimizer.budget = 1;
  auto recs = scan({0.7, 0.7}, [](double d) { return chem::H2Spec{d}; }, b, so);
  EXPECT_NE(recs[0].result.params(0), recs[1].result.params(0));
}

TEST(QuarticFit, RecoversParabola) {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 10; ++i) {
    xs.push_back(i * 0.7);
    ys.push_back(std::pow(xs.back() - 3.0, 2));
  }
  auto f = quartic_fit_min(xs, ys);
  EXPECT_TRUE(f.interior);
  EXPECT_NEAR(f.x_min, 3.0, 1e-9);
}

TEST(QuarticFit, SymmetricQuarticAtZero) {
  std::vector<double> xs, ys;
  for (int i = -5; i <= 5; ++i) {
    xs.push_back(i * 0.3);
    ys.push_back(std::pow(xs.back(), 4) + 0.5 * xs.back() * xs.back() - 1.0);
  }
  EXPECT_NEAR(quartic_fit_min(xs, ys).x_min, 0.0, 1e-9);
}

TEST(QuarticFit, DoubleWellPicksLowerAndTiesGoLeft) {
  std::vector<double> xs, ys;
  for (int i = -10; i <= 10; ++i) {
    const double x = i * 0.2;
    xs.push_back(x);
    ys.push_back(std::pow(x * x - 1.0, 2));
  }
  auto f = quartic_fit_min(xs, ys);
  EXPECT_NEAR(f.x_min, -1.0, 1e-9);
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] += 0.1 * xs[i];
  EXPECT_LT(quartic_fit_min(xs, ys).x_min, 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] -= 0.2 * xs[i];
  EXPECT_GT(quartic_fit_min(xs, ys).x_min, 0.0);
}

TEST(QuarticFit, MonotoneDataReportsBoundary) {
  std::vector<double> xs{1, 2, 3, 4, 5, 6, 7}, ys;
  for (double x : xs) ys.push_back(-x);
  auto f = quartic_fit_min(xs, ys);
  EXPECT_FALSE(f.interior);
  EXPECT_DOUBLE_EQ(f.x_min, 7.0);
}

TEST(QuarticFit, RejectsBadInput) {
  EXPECT_THROW(quartic_fit_min({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}), ConfigError);
  EXPECT_THROW(quartic_fit_min({1, 2, 3, 4, 5, 5}, {1, 2, 3, 4, 5, 6}), ConfigError);
}

TEST(RunRecord, CarriesConfigAndTrace) {
  auto a = build_cnot_ansatz(2, {{0, 1}}, 1);
  Binder b(a, device_for(2));
  auto p = make_problem(chem::H2Spec{0.74});
  VqeOptions o;
  o.seed = 12;
  o.optimizer.budget = 20;
  auto r = vqe_minimize(p.hamiltonian, b, o);
  auto j = run_record(p, a, r, o);
  EXPECT_EQ(j["system"], "h2");
  EXPECT_EQ(j["shots"], "exact");
  EXPECT_EQ(j["seed"], 12);
  EXPECT_EQ(j["trace"].size(), r.trace.size());
  EXPECT_EQ(j["best"]["energy"].get<double>(), r.energy);
  EXPECT_EQ(j["geometry"]["distance_angstrom"], 0.74);
  std::ostringstream csv;
  write_curve_csv(csv, {ScanRecord{0.74, p, r}});
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "x,energy_vqe,energy_fci,energy_hf,duration_samples");
}
