#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pvqe/chem/geometry.hpp"
#include "pvqe/qubitop/pauli.hpp"
#include "pvqe/vqe/ansatz.hpp"
#include "pvqe/vqe/bind.hpp"

namespace pvqe::vqe {

/// Qubit Hamiltonian of a hydrogen cluster with its classical references.
struct Problem {
  std::string system;   ///< "h2", "h3", "h4" or "explicit"
  std::string mapping;  ///< "parity-reduced" or "jordan-wigner"
  chem::SystemSpec spec;
  qubitop::PauliSum hamiltonian;
  double hf_energy = 0.0;
  /// Lowest eigenvalue in the electron sector of the molecule.
  double fci_energy = 0.0;
  int n_alpha = 0;
  int n_beta = 0;
};

/// STO-3G SCF, molecular-orbital Hamiltonian and qubit mapping. Two-atom
/// systems use the parity mapping with two-qubit reduction, everything else
/// Jordan-Wigner.
Problem make_problem(const chem::SystemSpec& spec);

/// FCI energy without building a qubit operator for the VQE.
double fci_energy(const chem::SystemSpec& spec);
double hf_energy(const chem::SystemSpec& spec);

/// Physical placement used for each qubit count: lagos qubits 0-1 for two
/// qubits, lagos 0-5 for six, a mumbai line for eight.
struct Layout {
  std::string fixture;  ///< file name inside the fixture directory
  std::vector<int> physical;
  Coupling coupling;  ///< logical edges, control first
};

Layout default_layout(int n_qubits);

/// Loads the layout's fixture from `fixture_dir`, or `fixture_file` when it is
/// not empty.
Device make_device(const Layout& layout, const std::filesystem::path& fixture_dir,
                   const std::filesystem::path& fixture_file = {});

std::string system_name(const chem::SystemSpec& spec);

}  // namespace pvqe::vqe
