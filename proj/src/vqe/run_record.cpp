#include "pvqe/vqe/run_record.hpp"

#include <iomanip>
#include <ostream>

namespace pvqe::vqe {

nlohmann::json geometry_json(const chem::SystemSpec& spec) {
  struct Visitor {
    nlohmann::json operator()(const chem::H2Spec& s) const { return {{"distance_angstrom", s.distance}}; }
    nlohmann::json operator()(const chem::H3Spec& s) const {
      return {{"side_angstrom", s.side}, {"alpha_deg", s.alpha_deg}};
    }
    nlohmann::json operator()(const chem::H4Spec& s) const {
      return {{"diagonal_angstrom", s.diagonal}, {"alpha_deg", s.alpha_deg}};
    }
    nlohmann::json operator()(const chem::ExplicitSpec& s) const {
      nlohmann::json atoms = nlohmann::json::array();
      for (const auto& a : s.atoms) atoms.push_back({a.x(), a.y(), a.z()});
      return {{"atoms_angstrom", atoms}};
    }
  };
  return std::visit(Visitor{}, spec);
}

nlohmann::json run_record(const Problem& p, const Ansatz& a, const VqeResult& r, const VqeOptions& opts) {
  nlohmann::json wrappers = nlohmann::json::array();
  for (auto w : a.wrappers) {
    wrappers.push_back(w == Wrapper::Amplitude ? "amplitude" : w == Wrapper::Duration ? "duration" : "identity");
  }
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& t : r.trace) trace.push_back({{"eval", t.eval}, {"energy", t.energy}, {"duration_samples", t.duration}});
  std::vector<double> params(r.params.data(), r.params.data() + r.params.size());
  return {{"system", p.system},
          {"geometry", geometry_json(p.spec)},
          {"mapping", p.mapping},
          {"ansatz", a.descriptor()},
          {"parameter_count", a.parameter_count()},
          {"wrappers", wrappers},
          {"seed", r.seed},
          {"method", r.method},
          {"shots", opts.shots ? nlohmann::json(*opts.shots) : nlohmann::json("exact")},
          {"fci_energy", p.fci_energy},
          {"hf_energy", p.hf_energy},
          {"evaluations", r.evaluations},
          {"trace", trace},
          {"best", {{"params", params}, {"energy", r.energy}, {"duration_samples", r.duration}}}};
}

void write_curve_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
  out << "x,energy_vqe,energy_fci,energy_hf,duration_samples\n";
  out << std::setprecision(12);
  for (const auto& r : records) {
    out << r.x << ',' << r.result.energy << ',' << r.problem.fci_energy << ',' << r.problem.hf_energy << ','
        << r.result.duration << '\n';
  }
}

}  // namespace pvqe::vqe
