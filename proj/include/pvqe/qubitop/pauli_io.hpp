#pragma once

#include <iosfwd>
#include <string>

#include "pvqe/qubitop/pauli.hpp"

namespace pvqe::qubitop {

/// Writes `n_qubits = N` followed by one `LABEL coefficient` line per term,
/// coefficients in scientific notation with 17 significant digits.
void write_pauli_sum(std::ostream& out, const PauliSum& op);

/// Inverse of write_pauli_sum. Blank lines and '#' comments are ignored.
PauliSum read_pauli_sum(std::istream& in);

std::string to_text(const PauliSum& op);
PauliSum from_text(const std::string& text);

}  // namespace pvqe::qubitop
