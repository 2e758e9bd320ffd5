#include "pvqe/pulse/cr_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "pvqe/errors.hpp"

namespace pvqe::pulse {

const std::vector<std::string>& CrModel::term_names() {
  static const std::vector<std::string> names{"zi", "zx", "zy", "zz", "ix", "iy", "iz"};
  return names;
}

double CrModel::term(std::string_view name) const { return const_cast<CrModel*>(this)->term(name); }

double& CrModel::term(std::string_view name) {
  if (name == "zi") return zi;
  if (name == "zx") return zx;
  if (name == "zy") return zy;
  if (name == "zz") return zz;
  if (name == "ix") return ix;
  if (name == "iy") return iy;
  if (name == "iz") return iz;
  throw ConfigError("unknown cross-resonance term '" + std::string(name) + "'");
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::vector<CrModel> parse_cr_fixture(std::string_view text) {
  static const std::regex pair_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  static const std::regex term_re(R"(nu_([a-z]{2})_khz)");
  static const std::regex value_re(R"(^([-+0-9.eE]+)\s*(?:(?:±|\+/-)\s*([0-9.eE]+))?$)");

  std::vector<CrModel> models;
  std::string device;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ConfigError("fixture line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    std::string key = lower(trim(line.substr(0, eq)));
    std::string value = trim(line.substr(eq + 1));
    std::smatch m;
    if (key == "device") {
      device = value;
    } else if (key == "pair") {
      if (!std::regex_match(value, m, pair_re)) fail("expected 'pair = (i, j)'");
      CrModel model;
      model.control = std::stoi(m[1]);
      model.target = std::stoi(m[2]);
      if (model.control == model.target) fail("control equals target");
      model.device = device;
      models.push_back(std::move(model));
    } else if (std::regex_match(key, m, term_re)) {
      if (models.empty()) fail("term before any 'pair' line");
      std::string name = m[1];
      std::smatch v;
      if (!std::regex_match(value, v, value_re)) fail("cannot parse value '" + value + "'");
      double khz = 0.0;
      try {
        khz = std::stod(v[1]);
      } catch (const std::exception&) {
        fail("cannot parse value '" + value + "'");
      }
      if (!std::isfinite(khz)) fail("non-finite value");
      models.back().term(name) = khz * 1e3;
      if (v[2].matched) models.back().uncertainty[name] = std::stod(v[2]) * 1e3;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  return models;
}

std::vector<CrModel> load_cr_fixture(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open fixture " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_cr_fixture(buf.str());
}

const CrModel& find_pair(const std::vector<CrModel>& models, int control, int target) {
  for (const auto& m : models)
    if (m.control == control && m.target == target) return m;
  throw ConfigError("no cross-resonance model for pair (" + std::to_string(control) + ", " +
                    std::to_string(target) + ")");
}

bool has_edge(const std::vector<CrModel>& models, int a, int b) {
  return std::any_of(models.begin(), models.end(), [&](const CrModel& m) {
    return (m.control == a && m.target == b) || (m.control == b && m.target == a);
  });
}

std::string to_fixture_text(const CrModel& m) {
  std::ostringstream out;
  if (!m.device.empty()) out << "device = " << m.device << '\n';
  out << "pair = (" << m.control << ", " << m.target << ")\n";
  char buf[96];
  for (const auto& name : CrModel::term_names()) {
    std::snprintf(buf, sizeof buf, "%.12g", m.term(name) / 1e3);
    out << "nu_" << name << "_khz = " << buf;
    auto it = m.uncertainty.find(name);
    if (it != m.uncertainty.end()) {
      std::snprintf(buf, sizeof buf, "%.12g", it->second / 1e3);
      out << " +/- " << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pvqe::pulse
