#include "pvqe/chem/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "pvqe/errors.hpp"

namespace pvqe::chem {

Geometry::Geometry(std::vector<Eigen::Vector3d> atoms_bohr, int charge)
    : atoms_(std::move(atoms_bohr)), charge_(charge) {
  if (atoms_.empty() || atoms_.size() > 4) {
    throw ConfigError("geometry must hold between 1 and 4 hydrogen atoms");
  }
  for (const auto& a : atoms_) {
    if (!a.allFinite()) throw ConfigError("geometry has non-finite coordinates");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (distance(i, j) <= 1e-8) {
        throw ConfigError("atoms " + std::to_string(j) + " and " + std::to_string(i) +
                          " coincide");
      }
    }
  }
  if (charge_ > static_cast<int>(atoms_.size())) throw ConfigError("charge exceeds nuclear count");
}

namespace {

double to_bohr(double x, LengthUnit unit) {
  return unit == LengthUnit::Angstrom ? angstrom_to_bohr(x) : x;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ConfigError(std::string(what) + " must be positive");
  }
}

void require_angle(double deg) {
  if (!(deg > 0.0 && deg < 180.0)) throw ConfigError("alpha must lie strictly between 0 and 180 degrees");
}

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

Geometry build_geometry(const SystemSpec& spec, LengthUnit unit) {
  struct Builder {
    LengthUnit unit;
    Geometry operator()(const H2Spec& s) const {
      require_positive(s.distance, "H2 distance");
      double d = to_bohr(s.distance, unit);
      return Geometry({Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(0, 0, d)});
    }
    Geometry operator()(const H3Spec& s) const {
      require_positive(s.side, "H3 side");
      require_angle(s.alpha_deg);
      double r = to_bohr(s.side, unit);
      double half = deg2rad(s.alpha_deg) / 2.0;
      return Geometry({Eigen::Vector3d(0, 0, 0),
                       Eigen::Vector3d(r * std::cos(half), r * std::sin(half), 0),
                       Eigen::Vector3d(r * std::cos(half), -r * std::sin(half), 0)});
    }
    Geometry operator()(const H4Spec& s) const {
      require_positive(s.diagonal, "H4 diagonal");
      require_angle(s.alpha_deg);
      double r = to_bohr(s.diagonal, unit) / 2.0;
      double half = deg2rad(s.alpha_deg) / 2.0;
      double c = r * std::cos(half);
      double sn = r * std::sin(half);
      return Geometry({Eigen::Vector3d(c, sn, 0), Eigen::Vector3d(-c, sn, 0),
                       Eigen::Vector3d(-c, -sn, 0), Eigen::Vector3d(c, -sn, 0)});
    }
    Geometry operator()(const ExplicitSpec& s) const {
      std::vector<Eigen::Vector3d> atoms;
      atoms.reserve(s.atoms.size());
      for (const auto& a : s.atoms) atoms.push_back(unit == LengthUnit::Angstrom ? a / kBohrRadiusAngstrom : a);
      return Geometry(std::move(atoms));
    }
  };
  return std::visit(Builder{unit}, spec);
}

double nuclear_repulsion(const Geometry& g) {
  double e = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) e += 1.0 / g.distance(i, j);
  }
  return e;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (trim(value.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("cannot parse number for '" + key + "': '" + value + "'");
}

}  // namespace

SystemSpec parse_system_spec(std::string_view text) {
  std::map<std::string, double> lengths;  // key stem -> Angstrom
  std::string system;
  std::optional<double> alpha;
  LengthUnit atom_unit = LengthUnit::Angstrom;
  std::vector<Eigen::Vector3d> atoms;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = lower(trim(line.substr(0, eq)));
    std::string value = trim(line.substr(eq + 1));
    if (key == "system") {
      system = lower(value);
    } else if (key == "units") {
      auto u = lower(value);
      if (u == "angstrom") atom_unit = LengthUnit::Angstrom;
      else if (u == "bohr") atom_unit = LengthUnit::Bohr;
      else throw ConfigError("unknown units '" + value + "'");
    } else if (key == "alpha_deg") {
      alpha = parse_number(key, value);
    } else if (key == "atom") {
      std::istringstream fields(value);
      std::string element;
      double x, y, z;
      if (!(fields >> element >> x >> y >> z) || lower(element) != "h") {
        throw ConfigError("line " + std::to_string(lineno) + ": expected 'atom = H x y z'");
      }
      atoms.emplace_back(x, y, z);
    } else if (key.ends_with("_angstrom")) {
      lengths[key.substr(0, key.size() - 9)] = parse_number(key, value);
    } else if (key.ends_with("_bohr")) {
      lengths[key.substr(0, key.size() - 5)] = bohr_to_angstrom(parse_number(key, value));
    } else {
      throw ConfigError("unknown geometry key '" + key + "'");
    }
  }

  auto need_length = [&](const char* stem) {
    auto it = lengths.find(stem);
    if (it == lengths.end()) throw ConfigError(std::string("missing ") + stem + "_angstrom");
    return it->second;
  };
  auto need_alpha = [&]() {
    if (!alpha) throw ConfigError("missing alpha_deg");
    return *alpha;
  };

  if (!atoms.empty()) {
    if (atom_unit == LengthUnit::Bohr) {
      for (auto& a : atoms) a *= kBohrRadiusAngstrom;
    }
    return ExplicitSpec{std::move(atoms)};
  }
  if (system == "h2") return H2Spec{need_length("distance")};
  if (system == "h3") return H3Spec{need_alpha(), need_length("side")};
  if (system == "h4") return H4Spec{need_alpha(), need_length("diagonal")};
  throw ConfigError("geometry text names no system and no atoms");
}

}  // namespace pvqe::chem
