#include "pvqe/cli/config.hpp"

#include <cmath>
#include <set>

#include "pvqe/errors.hpp"

namespace pvqe::cli {

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
void read_opt(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key)) return;
  if (j[key].is_null()) v.reset();
  else v = j[key].get<T>();
}

template <class T>
void read(const nlohmann::json& j, const char* key, T& v) {
  if (j.contains(key)) v = j[key].get<T>();
}

const std::set<std::string> kSystems{"h2", "h3", "h4"};

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"system", c.system},
          {"ansatz", c.ansatz},
          {"depth", c.depth},
          {"phases", c.phases},
          {"shots", c.shots ? nlohmann::json(*c.shots) : nlohmann::json("exact")},
          {"seed", c.seed},
          {"budget", c.budget},
          {"restarts", c.restarts},
          {"warm_start", c.warm_start},
          {"fixture", c.fixture},
          {"fixture_dir", c.fixture_dir},
          {"out", c.out},
          {"gnuplot_compatible", c.gnuplot_compatible},
          {"distance", opt(c.distance)},
          {"side", opt(c.side)},
          {"diagonal", opt(c.diagonal)},
          {"alpha", opt(c.alpha)},
          {"from", opt(c.from)},
          {"to", opt(c.to)},
          {"step", opt(c.step)},
          {"start", opt(c.start)},
          {"readout_eps", c.readout_eps},
          {"mitigate", c.mitigate},
          {"pair", c.pair},
          {"t_max_us", c.t_max_us},
          {"points", c.points},
          {"depths", c.depths},
          {"seeds", c.seeds}};
}

RunConfig merge_json(RunConfig c, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  const auto known = to_json(c);
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  try {
    read(j, "command", c.command);
    read(j, "system", c.system);
    read(j, "ansatz", c.ansatz);
    read(j, "depth", c.depth);
    read(j, "phases", c.phases);
    if (j.contains("shots")) {
      if (j["shots"].is_string()) {
        if (j["shots"] != "exact") throw ConfigError("shots must be a count or \"exact\"");
        c.shots.reset();
      } else {
        c.shots = j["shots"].get<std::uint64_t>();
      }
    }
    read(j, "seed", c.seed);
    read(j, "budget", c.budget);
    read(j, "restarts", c.restarts);
    read(j, "warm_start", c.warm_start);
    read(j, "fixture", c.fixture);
    read(j, "fixture_dir", c.fixture_dir);
    read(j, "out", c.out);
    read(j, "gnuplot_compatible", c.gnuplot_compatible);
    read_opt(j, "distance", c.distance);
    read_opt(j, "side", c.side);
    read_opt(j, "diagonal", c.diagonal);
    read_opt(j, "alpha", c.alpha);
    read_opt(j, "from", c.from);
    read_opt(j, "to", c.to);
    read_opt(j, "step", c.step);
    read_opt(j, "start", c.start);
    read(j, "readout_eps", c.readout_eps);
    read(j, "mitigate", c.mitigate);
    read(j, "pair", c.pair);
    read(j, "t_max_us", c.t_max_us);
    read(j, "points", c.points);
    read(j, "depths", c.depths);
    read(j, "seeds", c.seeds);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return c;
}

std::vector<double> scan_points(double from, double to, double step) {
  if (!(step > 0) || !std::isfinite(from) || !std::isfinite(to) || to < from) {
    throw ConfigError("scan needs from <= to and a positive step");
  }
  const auto n = static_cast<int>(std::floor((to - from) / step + 1e-9));
  std::vector<double> xs;
  // Multiplying instead of accumulating keeps grid values like 0.74 exact to
  // print precision.
  for (int i = 0; i <= n; ++i) xs.push_back(from + i * step);
  return xs;
}

RunConfig resolve(RunConfig c) {
  static const std::set<std::string> commands{"dissociation", "angle-scan", "cr-dynamics", "tomography",
                                              "groups",       "fci",        "depth-study"};
  if (!commands.count(c.command)) throw ConfigError("unknown command '" + c.command + "'");
  if (!kSystems.count(c.system)) throw ConfigError("system must be h2, h3 or h4");
  if (c.ansatz != "none" && c.ansatz != "cnot" && c.ansatz != "pulse") {
    throw ConfigError("ansatz must be none, cnot or pulse");
  }
  if (c.phases != "none" && c.phases != "pre-cr" && c.phases != "layer" && c.phases != "both") {
    throw ConfigError("phases must be none, pre-cr, layer or both");
  }
  if (c.depth < 1) throw ConfigError("depth must be at least 1");
  if (c.budget < 1) throw ConfigError("budget must be at least 1");
  if (c.restarts < 1) throw ConfigError("restarts must be at least 1");
  if (c.shots && *c.shots == 0) throw ConfigError("shots must be positive");
  if (c.readout_eps < 0 || c.readout_eps >= 0.5) throw ConfigError("readout_eps must lie in [0, 0.5)");
  if (c.points < 12) throw ConfigError("tomography needs at least 12 points");
  if (!(c.t_max_us > 0)) throw ConfigError("t_max_us must be positive");
  if (!c.pair.empty() && c.pair.size() != 2) throw ConfigError("pair takes two qubit indices");

  if (c.fixture_dir.empty()) c.fixture_dir = PVQE_DEFAULT_FIXTURE_DIR;
  auto fill = [](std::optional<double>& v, double d) {
    if (!v) v = d;
  };
  if (c.command == "dissociation") {
    if (c.system == "h2") {
      fill(c.from, 0.3), fill(c.to, 2.5), fill(c.step, 0.1), fill(c.start, 0.74);
    } else if (c.system == "h3") {
      fill(c.from, 1.0), fill(c.to, 2.0), fill(c.step, 0.01), fill(c.start, 1.43);
    } else {
      // Square H4, scanned in the center-to-atom distance (half diagonal).
      fill(c.from, 0.6), fill(c.to, 1.3), fill(c.step, 0.01), fill(c.start, 0.9);
    }
  } else if (c.command == "angle-scan") {
    if (c.system == "h2") throw ConfigError("angle-scan needs h3 or h4");
    fill(c.from, 20.0), fill(c.to, 60.0), fill(c.step, 2.0);
    if (c.system == "h3") fill(c.side, 1.43);
    else fill(c.diagonal, 1.8);
  } else if (c.command == "groups" || c.command == "fci") {
    if (c.system == "h2") fill(c.distance, 0.74);
    if (c.system == "h3") fill(c.side, 1.43), fill(c.alpha, 60.0);
    if (c.system == "h4") fill(c.diagonal, 1.8), fill(c.alpha, 40.0);
  } else if (c.command == "cr-dynamics") {
    fill(c.from, 256.0), fill(c.to, 1040.0), fill(c.step, 16.0);
  } else if (c.command == "depth-study") {
    // The study is defined on H3 only.
    c.system = "h3";
    fill(c.side, 1.43), fill(c.alpha, 40.0);
    if (c.ansatz == "none") c.ansatz = "cnot";
    if (!c.shots) c.shots = 4096;
    if (c.depths.empty() || c.seeds.empty()) throw ConfigError("depth-study needs depths and seeds");
  }
  if (c.start && c.from && c.to && (*c.start < *c.from || *c.start > *c.to)) {
    throw ConfigError("scan start lies outside [from, to]");
  }
  return c;
}

}  // namespace pvqe::cli
