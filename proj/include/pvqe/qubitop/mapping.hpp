#pragma once

#include <array>

#include "pvqe/chem/mo_hamiltonian.hpp"
#include "pvqe/qubitop/pauli.hpp"

namespace pvqe::qubitop {

inline constexpr double kPruneThreshold = 1e-12;

/// Jordan-Wigner ladder operators: a_p = (prod_{k<p} Z_k)(X_p + iY_p)/2.
QubitOperator jw_annihilation(int mode, int n_modes);
QubitOperator jw_creation(int mode, int n_modes);

/// Spin orbital p maps to qubit p. Coefficients below `prune` are dropped.
PauliSum jordan_wigner(const chem::MoHamiltonian& h, double prune = kPruneThreshold);

/// Conjugates a Jordan-Wigner operator into the parity encoding, where qubit j
/// stores the occupation parity of modes 0..j.
PauliSum parity_transform(const PauliSum& jw_operator);

/// Two-qubit H2 operator with the parity qubits 1 and 3 replaced by their
/// symmetry eigenvalues.
struct TaperedH2 {
  PauliSum op{2};
  /// Z eigenvalues (+1/-1) substituted for qubits 1 and 3.
  std::array<int, 2> sector{1, 1};
  /// Ground energy of the untapered four-qubit Jordan-Wigner operator.
  double full_ground_energy = 0.0;
};

/// Replaces Z on qubits 1 and 3 of a four-qubit parity operator by the given
/// eigenvalues. Throws NumericalError if X or Y acts on either qubit.
PauliSum taper_parity_h2(const PauliSum& parity_operator, int z1, int z3);

/// Parity mapping plus two-qubit reduction for H2 in a minimal basis. The
/// sector implied by the electron counts is preferred; any sector matching the
/// four-qubit ground energy to 1e-9 Ha is accepted, otherwise NumericalError.
TaperedH2 parity_map_reduce_h2(const chem::MoHamiltonian& h);

}  // namespace pvqe::qubitop
