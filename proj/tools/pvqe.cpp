#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvqe/cli/commands.hpp"
#include "pvqe/cli/config.hpp"
#include "pvqe/errors.hpp"

using pvqe::cli::RunConfig;

namespace {

struct Flags {
  std::string shots = "exact";
  std::string config;
  std::string pair;
};

void add_common(CLI::App* sub, RunConfig& c, Flags& f) {
  sub->add_option("--system", c.system, "h2, h3 or h4")->capture_default_str();
  sub->add_option("--ansatz", c.ansatz, "none, cnot or pulse")->capture_default_str();
  sub->add_option("--depth", c.depth, "ansatz depth p")->capture_default_str();
  sub->add_option("--phases", c.phases, "pulse phases: none, pre-cr, layer or both")->capture_default_str();
  sub->add_option("--shots", f.shots, "shots per group, or 'exact'")->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for initial points and shot sampling")->capture_default_str();
  sub->add_option("--budget", c.budget, "objective evaluations per optimization")->capture_default_str();
  sub->add_option("--restarts", c.restarts, "random initial points per optimization")->capture_default_str();
  sub->add_flag("!--no-warm-start", c.warm_start, "initialize every scan point at random");
  sub->add_option("--fixture", c.fixture, "CR model fixture file");
  sub->add_option("--fixture-dir", c.fixture_dir, "directory of the default fixtures");
  sub->add_option("--out", c.out, "output directory")->capture_default_str();
  sub->add_option("--config", f.config, "JSON config; its keys override flags");
  sub->add_flag("--gnuplot-compatible", c.gnuplot_compatible, "space-separated curve columns");
  sub->add_option("--distance", c.distance, "H2 bond length (Angstrom)");
  sub->add_option("--side", c.side, "H3 side length (Angstrom)");
  sub->add_option("--diagonal", c.diagonal, "H4 diagonal length (Angstrom)");
  sub->add_option("--alpha", c.alpha, "H3/H4 angle (degrees)");
  sub->add_option("--from", c.from, "first scan value");
  sub->add_option("--to", c.to, "last scan value");
  sub->add_option("--step", c.step, "scan step");
  sub->add_option("--start", c.start, "scan point optimized first from a random start");
  sub->add_option("--readout-eps", c.readout_eps, "per-qubit readout flip probability in shot mode");
  sub->add_flag("--mitigate", c.mitigate, "apply tensored readout mitigation");
  sub->add_option("--pair", f.pair, "control,target qubit pair");
  sub->add_option("--t-max-us", c.t_max_us, "longest tomography time span (microseconds)")->capture_default_str();
  sub->add_option("--points", c.points, "tomography time points")->capture_default_str();
  sub->add_option("--depths", c.depths, "depth-study depths")->delimiter(',');
  sub->add_option("--seeds", c.seeds, "depth-study seeds")->delimiter(',');
}

RunConfig finish(RunConfig c, const Flags& f) {
  if (f.shots == "exact") {
    c.shots.reset();
  } else {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(f.shots, &used);
      if (used != f.shots.size()) throw std::invalid_argument("trailing");
      c.shots = v;
    } catch (const std::exception&) {
      throw pvqe::ConfigError("--shots takes a count or 'exact'");
    }
  }
  if (!f.pair.empty()) {
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream in(f.pair);
    if (!(in >> a >> comma >> b) || comma != ',') throw pvqe::ConfigError("--pair takes 'control,target'");
    c.pair = {a, b};
  }
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw pvqe::ConfigError("cannot read config " + f.config);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw pvqe::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    const std::string command = c.command;
    c = pvqe::cli::merge_json(c, j);
    c.command = command;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-level VQE lab for small hydrogen clusters"};
  app.require_subcommand(1);
  RunConfig config;
  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"dissociation", "energy along a bond-length scan"},
      {"angle-scan", "energy along an angle scan with quartic fit"},
      {"cr-dynamics", "CR population dynamics with and without echo"},
      {"tomography", "CR Hamiltonian tomography round trip"},
      {"groups", "Pauli term and measurement-group report"},
      {"fci", "FCI and HF energies at one geometry"},
      {"depth-study", "CNOT-ansatz depth and seed study on H3"}};
  for (auto [name, help] : commands) add_common(app.add_subcommand(name, help), config, flags);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    config.command = app.get_subcommands().front()->get_name();
    config = finish(config, flags);
  } catch (const pvqe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return pvqe::cli::run_and_report(config, std::cout, std::cerr);
}
