#include "pvqe/vqe/problems.hpp"

#include "pvqe/chem/hartree_fock.hpp"
#include "pvqe/chem/mo_hamiltonian.hpp"
#include "pvqe/errors.hpp"
#include "pvqe/pulse/cr_model.hpp"
#include "pvqe/qubitop/dense.hpp"
#include "pvqe/qubitop/mapping.hpp"

namespace pvqe::vqe {

namespace {

struct Electronic {
  chem::MoHamiltonian mo;
  double hf = 0.0;
};

Electronic electronic(const chem::SystemSpec& spec) {
  auto g = chem::build_geometry(spec);
  auto ints = chem::ao_integrals(g);
  auto scf = chem::hartree_fock(ints, g.n_alpha(), g.n_beta());
  return {chem::mo_hamiltonian(ints, scf), scf.energy};
}

}  // namespace

std::string system_name(const chem::SystemSpec& spec) {
  switch (spec.index()) {
    case 0: return "h2";
    case 1: return "h3";
    case 2: return "h4";
    default: return "explicit";
  }
}

Problem make_problem(const chem::SystemSpec& spec) {
  auto e = electronic(spec);
  Problem p;
  p.system = system_name(spec);
  p.spec = spec;
  p.hf_energy = e.hf;
  p.n_alpha = e.mo.n_alpha;
  p.n_beta = e.mo.n_beta;
  if (e.mo.n_spatial() == 2 && e.mo.n_alpha == 1 && e.mo.n_beta == 1) {
    auto reduced = qubitop::parity_map_reduce_h2(e.mo);
    p.mapping = "parity-reduced";
    p.hamiltonian = reduced.op;
    p.fci_energy = qubitop::exact_ground(reduced.op).energy;
  } else {
    p.mapping = "jordan-wigner";
    p.hamiltonian = qubitop::jordan_wigner(e.mo);
    p.fci_energy = qubitop::exact_ground_in_sector(p.hamiltonian, p.n_alpha, p.n_beta).energy;
  }
  return p;
}

double fci_energy(const chem::SystemSpec& spec) {
  auto e = electronic(spec);
  return qubitop::exact_ground_in_sector(qubitop::jordan_wigner(e.mo), e.mo.n_alpha, e.mo.n_beta).energy;
}

double hf_energy(const chem::SystemSpec& spec) { return electronic(spec).hf; }

Layout default_layout(int n_qubits) {
  switch (n_qubits) {
    case 2:
      return {"ibm_lagos.txt", {0, 1}, {{0, 1}}};
    case 6:
      return {"ibm_lagos.txt", {0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {1, 3}, {3, 5}, {5, 4}}};
    case 8: {
      Layout l{"ibmq_mumbai.txt", {12, 13, 14, 16, 19, 22, 25, 26}, {}};
      for (int i = 0; i + 1 < 8; ++i) l.coupling.emplace_back(i, i + 1);
      return l;
    }
    default:
      throw ConfigError("no default layout for " + std::to_string(n_qubits) + " qubits");
  }
}

Device make_device(const Layout& layout, const std::filesystem::path& fixture_dir,
                   const std::filesystem::path& fixture_file) {
  Device d;
  const auto path = fixture_file.empty() ? fixture_dir / layout.fixture : fixture_file;
  d.models = pulse::load_cr_fixture(path);
  d.name = d.models.empty() ? std::string{} : d.models.front().device;
  d.layout = layout.physical;
  return d;
}

}  // namespace pvqe::vqe
