#include "pvqe/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "pvqe/errors.hpp"
#include "pvqe/pulse/cr_dynamics.hpp"
#include "pvqe/pulse/tomography.hpp"
#include "pvqe/qubitop/grouping.hpp"
#include "pvqe/qubitop/pauli_io.hpp"
#include "pvqe/sim/readout.hpp"
#include "pvqe/vqe/problems.hpp"
#include "pvqe/vqe/quartic_fit.hpp"
#include "pvqe/vqe/run_record.hpp"
#include "pvqe/vqe/scan.hpp"

namespace pvqe::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << std::setprecision(17);
  return f;
}

void write_json(const fs::path& path, const nlohmann::json& j) { open_out(path) << j.dump(2) << '\n'; }

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

// Scan coordinates print short; energies keep full precision.
std::string coord(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

// Everything an ansatz run needs besides the Hamiltonian.
struct Setup {
  vqe::Ansatz ansatz;
  vqe::Device device;
  vqe::VqeOptions vqe;
  sim::ReadoutModel readout;
};

vqe::Ansatz build_ansatz(const RunConfig& c, const std::string& kind, int depth, int n_qubits,
                         const vqe::Coupling& coupling) {
  if (kind == "cnot") return vqe::build_cnot_ansatz(n_qubits, coupling, depth);
  const bool pre = c.phases == "pre-cr" || c.phases == "both";
  const bool layer = c.phases == "layer" || c.phases == "both";
  return vqe::build_pulse_ansatz(n_qubits, coupling, depth, pre, layer);
}

int qubits_for(const std::string& system) { return system == "h2" ? 2 : system == "h3" ? 6 : 8; }

vqe::Device device_for(const RunConfig& c, const vqe::Layout& layout) {
  return vqe::make_device(layout, c.fixture_dir, c.fixture);
}

// Setup is heap-stable so that VqeOptions can point at its readout model.
std::unique_ptr<Setup> make_setup(const RunConfig& c, const std::string& kind, int depth) {
  const int n = qubits_for(c.system);
  auto layout = vqe::default_layout(n);
  auto s = std::make_unique<Setup>(
      Setup{build_ansatz(c, kind, depth, n, layout.coupling), device_for(c, layout), {}, {}});
  s->vqe.shots = c.shots;
  s->vqe.seed = c.seed;
  s->vqe.restarts = c.restarts;
  s->vqe.optimizer.budget = c.budget;
  if (c.shots && c.readout_eps > 0) {
    s->readout = sim::ReadoutModel::uniform(n, c.readout_eps, c.readout_eps);
    s->vqe.noise = &s->readout;
    if (c.mitigate) s->vqe.mitigation = &s->readout;
  }
  return s;
}

chem::SystemSpec point_spec(const RunConfig& c, double x) {
  if (c.command == "dissociation") {
    if (c.system == "h2") return chem::H2Spec{x};
    if (c.system == "h3") return chem::H3Spec{60.0, x};
    return chem::H4Spec{90.0, 2.0 * x};
  }
  if (c.system == "h3") return chem::H3Spec{x, *c.side};
  return chem::H4Spec{x, *c.diagonal};
}

chem::SystemSpec fixed_spec(const RunConfig& c) {
  if (c.system == "h2") return chem::H2Spec{*c.distance};
  if (c.system == "h3") return chem::H3Spec{*c.alpha, *c.side};
  return chem::H4Spec{*c.alpha, *c.diagonal};
}

struct CurveRow {
  double x;
  vqe::Problem problem;
  std::optional<vqe::VqeResult> result;
};

// FCI/HF at every point; VQE too when an ansatz is set, warm-started outward
// from the point nearest `start` in both directions.
std::vector<CurveRow> run_curve(const RunConfig& c, const std::vector<double>& xs, const Setup* setup,
                                const fs::path& runs_dir) {
  std::vector<CurveRow> rows;
  for (double x : xs) rows.push_back({x, vqe::make_problem(point_spec(c, x)), std::nullopt});
  if (!setup) return rows;

  vqe::Binder binder(setup->ansatz, setup->device);
  std::size_t first = 0;
  if (c.start) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (std::abs(xs[i] - *c.start) < std::abs(xs[first] - *c.start)) first = i;
    }
  }
  auto run_branch = [&](const std::vector<std::size_t>& order, Eigen::VectorXd prev) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto& row = rows[order[k]];
      vqe::VqeOptions vo = setup->vqe;
      if (c.warm_start && prev.size() > 0) {
        vo.x0 = prev;
      } else if (!c.warm_start) {
        vo.seed = c.seed + order[k];
      }
      row.result = vqe::vqe_minimize(row.problem.hamiltonian, binder, vo);
      prev = row.result->params;
      write_json(runs_dir / ("point_" + std::to_string(order[k]) + ".json"),
                 vqe::run_record(row.problem, setup->ansatz, *row.result, vo));
    }
  };
  std::vector<std::size_t> up, down;
  for (std::size_t i = first; i < xs.size(); ++i) up.push_back(i);
  for (std::size_t i = first; i-- > 0;) down.push_back(i);
  run_branch(up, Eigen::VectorXd());
  run_branch(down, rows[first].result->params);
  return rows;
}

std::size_t argmin_fci(const std::vector<CurveRow>& rows) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].problem.fci_energy < rows[best].problem.fci_energy) best = i;
  }
  return best;
}

nlohmann::json fit_json(const vqe::QuarticFit& f) {
  return {{"coefficients", f.coef}, {"center", f.center}, {"scale", f.scale},
          {"x_min", f.x_min},       {"y_min", f.y_min},   {"interior", f.interior}};
}

void cmd_dissociation(const RunConfig& c, std::ostream& log) {
  const auto xs = scan_points(*c.from, *c.to, *c.step);
  auto setup = c.ansatz == "none" ? nullptr : make_setup(c, c.ansatz, c.depth);
  fs::create_directories(fs::path(c.out) / "runs");
  auto rows = run_curve(c, xs, setup.get(), fs::path(c.out) / "runs");

  auto csv = open_out(fs::path(c.out) / "curve.csv");
  if (c.gnuplot_compatible) csv << "# x energy_fci energy_hf energy_vqe duration_samples\n";
  else csv << "x,energy_vqe,energy_fci,energy_hf,duration_samples\n";
  double max_err = 0.0;
  for (const auto& r : rows) {
    const double e = r.result ? r.result->energy : nan();
    const int dur = r.result ? r.result->duration : 0;
    if (r.result) max_err = std::max(max_err, std::abs(e - r.problem.fci_energy));
    if (c.gnuplot_compatible) {
      csv << coord(r.x) << ' ' << r.problem.fci_energy << ' ' << r.problem.hf_energy << ' ' << e << ' ' << dur << '\n';
    } else {
      csv << coord(r.x) << ',' << e << ',' << r.problem.fci_energy << ',' << r.problem.hf_energy << ',' << dur << '\n';
    }
  }
  const auto best = argmin_fci(rows);
  nlohmann::json summary{{"fci_min_x", rows[best].x}, {"fci_min_energy", rows[best].problem.fci_energy},
                         {"points", rows.size()}};
  if (setup) summary["max_abs_error"] = max_err;
  write_json(fs::path(c.out) / "summary.json", summary);
  log << "FCI minimum at x = " << rows[best].x << " (" << rows[best].problem.fci_energy << " Ha)\n";
  if (setup) log << "max |E_vqe - E_fci| = " << max_err << " Ha\n";
}

void cmd_angle_scan(const RunConfig& c, std::ostream& log) {
  const auto xs = scan_points(*c.from, *c.to, *c.step);
  auto setup = c.ansatz == "none" ? nullptr : make_setup(c, c.ansatz, c.depth);
  fs::create_directories(fs::path(c.out) / "runs");
  RunConfig scan_cfg = c;
  scan_cfg.start = c.from;
  auto rows = run_curve(scan_cfg, xs, setup.get(), fs::path(c.out) / "runs");

  // CNOT durations do not depend on the parameters.
  int cnot_duration = 0;
  if (setup) {
    auto cnot = make_setup(c, "cnot", c.depth);
    cnot_duration = vqe::Binder(cnot->ansatz, cnot->device)
                        .duration(Eigen::VectorXd::Zero(cnot->ansatz.parameter_count()));
  }
  auto csv = open_out(fs::path(c.out) / "angle_scan.csv");
  csv << "alpha_deg,energy_vqe,energy_fci,energy_hf,duration_samples,duration_fraction\n";
  std::vector<double> fci, vqe_e;
  double max_fraction = 0.0;
  for (const auto& r : rows) {
    const double e = r.result ? r.result->energy : nan();
    const int dur = r.result ? r.result->duration : 0;
    const double frac = r.result ? static_cast<double>(dur) / cnot_duration : nan();
    if (r.result) max_fraction = std::max(max_fraction, frac);
    csv << coord(r.x) << ',' << e << ',' << r.problem.fci_energy << ',' << r.problem.hf_energy << ',' << dur << ','
        << frac << '\n';
    fci.push_back(r.problem.fci_energy);
    vqe_e.push_back(e);
  }
  auto fci_fit = vqe::quartic_fit_min(xs, fci);
  nlohmann::json fit{{"fci", fit_json(fci_fit)}};
  log << "FCI quartic-fit alpha_min = " << fci_fit.x_min << " deg\n";
  if (setup) {
    auto vfit = vqe::quartic_fit_min(xs, vqe_e);
    fit["vqe"] = fit_json(vfit);
    fit["cnot_duration_samples"] = cnot_duration;
    fit["max_duration_fraction"] = max_fraction;
    log << "VQE quartic-fit alpha_min = " << vfit.x_min << " deg, max duration fraction " << max_fraction << '\n';
  }
  write_json(fs::path(c.out) / "fit.json", fit);
}

const pulse::CrModel& pick_pair(const std::vector<pulse::CrModel>& models, const RunConfig& c) {
  if (models.empty()) throw ConfigError("fixture holds no qubit pairs");
  if (c.pair.empty()) return models.front();
  return pulse::find_pair(models, c.pair[0], c.pair[1]);
}

std::vector<pulse::CrModel> load_fixture(const RunConfig& c) {
  const fs::path path = c.fixture.empty() ? fs::path(c.fixture_dir) / "ibm_lagos.txt" : fs::path(c.fixture);
  return pulse::load_cr_fixture(path);
}

void cmd_cr_dynamics(const RunConfig& c, std::ostream& log) {
  auto models = load_fixture(c);
  const auto& m = pick_pair(models, c);
  std::vector<int> durations;
  for (double d : scan_points(*c.from, *c.to, *c.step)) durations.push_back(static_cast<int>(std::lround(d)));
  auto points = pulse::cr_dynamics(m, durations);
  fs::create_directories(c.out);
  auto csv = open_out(fs::path(c.out) / "dynamics.csv");
  // Target excited-state population for each initial control state.
  csv << "duration,time_s,plain_c0,plain_c1,echo_c0,echo_c1,zx_c0,zx_c1\n";
  // Summed over control outcomes, since the echo flips the control twice.
  auto p1 = [](const pulse::Populations& p) { return p[1] + p[3]; };
  for (const auto& p : points) {
    csv << p.duration << ',' << p.time_s;
    for (const auto* set : {&p.plain, &p.echoed, &p.zx_only}) csv << ',' << p1((*set)[0]) << ',' << p1((*set)[1]);
    csv << '\n';
  }
  log << "wrote " << points.size() << " dynamics points for pair (" << m.control << ", " << m.target << ")\n";
}

nlohmann::json model_json(const pulse::CrModel& m) {
  nlohmann::json j{{"pair", {m.control, m.target}}};
  for (const auto& t : pulse::CrModel::term_names()) j[t + "_khz"] = m.term(t) / 1e3;
  return j;
}

void cmd_tomography(const RunConfig& c, std::ostream& log) {
  auto models = load_fixture(c);
  std::vector<pulse::CrModel> chosen;
  if (c.pair.empty()) chosen = models;
  else chosen.push_back(pick_pair(models, c));
  fs::create_directories(c.out);
  nlohmann::json report = nlohmann::json::array();
  for (const auto& m : chosen) {
    const double span = pulse::sampling_window(m, c.points, c.t_max_us * 1e-6);
    const auto times = pulse::linspace_times(span, c.points);
    auto traces = pulse::tomography_traces(m, times);
    auto fit = pulse::fit_tomography(traces);
    auto csv = open_out(fs::path(c.out) / ("traces_" + std::to_string(m.control) + "_" + std::to_string(m.target) + ".csv"));
    csv << std::setprecision(17);
    pulse::write_traces_csv(csv, traces);
    double worst = 0.0;
    for (const char* t : {"zx", "zy", "zz", "ix", "iy", "iz"}) {
      if (m.term(t) != 0.0) worst = std::max(worst, std::abs(fit.model.term(t) - m.term(t)) / std::abs(m.term(t)));
    }
    report.push_back({{"fixture", model_json(m)},
                      {"fitted", model_json(fit.model)},
                      {"t_max_s", span},
                      {"residual", fit.residual},
                      {"max_relative_error", worst}});
    log << "pair (" << m.control << ", " << m.target << "): residual " << fit.residual << ", max relative error "
        << worst << '\n';
  }
  write_json(fs::path(c.out) / "tomography.json", report);
}

void cmd_groups(const RunConfig& c, std::ostream& log) {
  auto p = vqe::make_problem(fixed_spec(c));
  auto groups = qubitop::group_qubitwise(p.hamiltonian);
  fs::create_directories(c.out);
  nlohmann::json j{{"system", p.system},
                   {"geometry", vqe::geometry_json(p.spec)},
                   {"mapping", p.mapping},
                   {"terms", p.hamiltonian.size()},
                   {"groups", groups.size()}};
  nlohmann::json list = nlohmann::json::array();
  auto txt = open_out(fs::path(c.out) / "groups.txt");
  txt << p.hamiltonian.size() << " terms, " << groups.size() << " groups\n";
  for (const auto& g : groups) {
    nlohmann::json members = nlohmann::json::array();
    txt << g.basis.label() << ":";
    for (const auto& m : g.members) {
      members.push_back(m.label());
      txt << ' ' << m.label();
    }
    txt << '\n';
    list.push_back({{"basis", g.basis.label()}, {"members", members}});
  }
  j["group_contents"] = list;
  write_json(fs::path(c.out) / "groups.json", j);
  log << p.hamiltonian.size() << " terms, " << groups.size() << " groups\n";
}

void cmd_fci(const RunConfig& c, std::ostream& log) {
  auto p = vqe::make_problem(fixed_spec(c));
  fs::create_directories(c.out);
  auto ham = open_out(fs::path(c.out) / "hamiltonian.txt");
  qubitop::write_pauli_sum(ham, p.hamiltonian);
  write_json(fs::path(c.out) / "fci.json", {{"system", p.system},
                                             {"geometry", vqe::geometry_json(p.spec)},
                                             {"mapping", p.mapping},
                                             {"n_qubits", p.hamiltonian.n_qubits()},
                                             {"terms", p.hamiltonian.size()},
                                             {"fci_energy", p.fci_energy},
                                             {"hf_energy", p.hf_energy}});
  log << std::setprecision(12) << "FCI " << p.fci_energy << " Ha, HF " << p.hf_energy << " Ha\n";
}

void cmd_depth_study(const RunConfig& c, std::ostream& log) {
  auto p = vqe::make_problem(fixed_spec(c));
  fs::create_directories(fs::path(c.out) / "runs");
  auto csv = open_out(fs::path(c.out) / "depth_traces.csv");
  csv << "depth,seed,eval,energy,best_energy,duration_samples\n";
  nlohmann::json summary = nlohmann::json::array();
  for (int depth : c.depths) {
    auto setup = make_setup(c, c.ansatz, depth);
    vqe::Binder binder(setup->ansatz, setup->device);
    for (auto seed : c.seeds) {
      vqe::VqeOptions vo = setup->vqe;
      vo.seed = seed;
      vo.restarts = 1;
      auto r = vqe::vqe_minimize(p.hamiltonian, binder, vo);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& t : r.trace) {
        best = std::min(best, t.energy);
        csv << depth << ',' << seed << ',' << t.eval << ',' << t.energy << ',' << best << ',' << t.duration << '\n';
      }
      write_json(fs::path(c.out) / "runs" / ("p" + std::to_string(depth) + "_seed" + std::to_string(seed) + ".json"),
                 vqe::run_record(p, setup->ansatz, r, vo));
      summary.push_back({{"depth", depth}, {"seed", seed}, {"best_energy", r.energy}, {"evaluations", r.evaluations}});
      log << "depth " << depth << " seed " << seed << ": best " << r.energy << " Ha (FCI " << p.fci_energy << ")\n";
    }
  }
  write_json(fs::path(c.out) / "summary.json",
             {{"fci_energy", p.fci_energy}, {"hf_energy", p.hf_energy}, {"runs", summary}});
}

}  // namespace

void run_command(const RunConfig& c, std::ostream& log) {
  fs::create_directories(c.out);
  write_json(fs::path(c.out) / "config.json", to_json(c));
  if (c.command == "dissociation") cmd_dissociation(c, log);
  else if (c.command == "angle-scan") cmd_angle_scan(c, log);
  else if (c.command == "cr-dynamics") cmd_cr_dynamics(c, log);
  else if (c.command == "tomography") cmd_tomography(c, log);
  else if (c.command == "groups") cmd_groups(c, log);
  else if (c.command == "fci") cmd_fci(c, log);
  else if (c.command == "depth-study") cmd_depth_study(c, log);
  else throw ConfigError("unknown command '" + c.command + "'");
}

int run_and_report(const RunConfig& c, std::ostream& log, std::ostream& err) {
  try {
    run_command(resolve(c), log);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace pvqe::cli
