#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvqe/vqe/problems.hpp"
#include "pvqe/vqe/scan.hpp"
#include "pvqe/vqe/vqe.hpp"

namespace pvqe::vqe {

nlohmann::json geometry_json(const chem::SystemSpec& spec);

/// {system, geometry, mapping, ansatz, wrappers, seed, method, shots, trace,
/// best, fci_energy, hf_energy}.
nlohmann::json run_record(const Problem& p, const Ansatz& a, const VqeResult& r, const VqeOptions& opts);

/// CSV `x,energy_vqe,energy_fci,energy_hf,duration_samples`.
void write_curve_csv(std::ostream& out, const std::vector<ScanRecord>& records);

}  // namespace pvqe::vqe
