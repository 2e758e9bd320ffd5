#pragma once

#include <vector>

#include "pvqe/qubitop/pauli.hpp"

namespace pvqe::qubitop {

/// Pauli terms measurable together after one layer of single-qubit rotations.
struct MeasurementGroup {
  std::vector<PauliString> members;
  /// Per-qubit measurement letter; 'I' where no member acts.
  PauliString basis;
};

/// Greedy largest-degree-first colouring of the graph whose edges join terms
/// that do not commute qubit-wise. Ties fall to larger |coefficient|, then to
/// label order. The identity term belongs to no group.
std::vector<MeasurementGroup> group_qubitwise(const PauliSum& op);

}  // namespace pvqe::qubitop
