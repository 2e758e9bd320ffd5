#include "pvqe/qubitop/mapping.hpp"

#include <cmath>
#include <vector>

#include "pvqe/errors.hpp"
#include "pvqe/qubitop/dense.hpp"

namespace pvqe::qubitop {

namespace {

QubitOperator ladder(int mode, int n_modes, bool creation) {
  if (mode < 0 || mode >= n_modes) throw ConfigError("fermionic mode out of range");
  PauliString xs = PauliString::identity(n_modes);
  for (int k = 0; k < mode; ++k) xs.set(k, 'Z');
  PauliString ys = xs;
  xs.set(mode, 'X');
  ys.set(mode, 'Y');
  QubitOperator op(n_modes);
  op.add(xs, 0.5);
  op.add(ys, creation ? cplx(0, -0.5) : cplx(0, 0.5));
  return op;
}

}  // namespace

QubitOperator jw_annihilation(int mode, int n_modes) { return ladder(mode, n_modes, false); }
QubitOperator jw_creation(int mode, int n_modes) { return ladder(mode, n_modes, true); }

PauliSum jordan_wigner(const chem::MoHamiltonian& h, double prune) {
  const int n = static_cast<int>(h.n_spin_orbitals());
  if (n == 0 || n > kMaxQubits) throw ConfigError("unsupported spin-orbital count");
  constexpr double kSkip = 1e-14;

  std::vector<QubitOperator> create, annihilate;
  for (int p = 0; p < n; ++p) {
    create.push_back(jw_creation(p, n));
    annihilate.push_back(jw_annihilation(p, n));
  }

  QubitOperator total(n);
  total.add(PauliString::identity(n), h.constant);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      double v = h.one_body(p, q);
      if (std::abs(v) < kSkip) continue;
      QubitOperator term = create[p] * annihilate[q];
      term *= v;
      total += term;
    }
  }

  // 1/2 <pq|rs> a+_p a+_q a_s a_r
  std::vector<QubitOperator> pair_create(static_cast<std::size_t>(n * n));
  std::vector<QubitOperator> pair_annihilate(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      pair_create[p * n + q] = create[p] * create[q];
      pair_annihilate[p * n + q] = annihilate[p] * annihilate[q];
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double v = h.two_body(p, q, r, s);
          if (std::abs(v) < kSkip || p == q || r == s) continue;
          QubitOperator term = pair_create[p * n + q] * pair_annihilate[s * n + r];
          term *= 0.5 * v;
          total += term;
        }

  total.prune(prune);
  PauliSum out = PauliSum::from_operator(total);
  out.prune(prune);
  return out;
}

PauliSum parity_transform(const PauliSum& jw_operator) {
  const int n = jw_operator.n_qubits();
  // Images of X_j and Z_j; Y_j = i X_j Z_j.
  std::vector<PauliString> x_image, z_image;
  for (int j = 0; j < n; ++j) {
    PauliString xi = PauliString::identity(n);
    for (int k = j; k < n; ++k) xi.set(k, 'X');
    PauliString zi = PauliString::single(n, j, 'Z');
    if (j > 0) zi.set(j - 1, 'Z');
    x_image.push_back(xi);
    z_image.push_back(zi);
  }
  QubitOperator out(n);
  for (const auto& [p, c] : jw_operator.terms()) {
    cplx phase = 1.0;
    PauliString image = PauliString::identity(n);
    for (int j = 0; j < n; ++j) {
      char op = p.at(j);
      if (op == 'I') continue;
      if (op == 'X' || op == 'Y') {
        auto [ph, r] = multiply(image, x_image[j]);
        phase *= ph;
        image = r;
      }
      if (op == 'Z' || op == 'Y') {
        auto [ph, r] = multiply(image, z_image[j]);
        phase *= ph;
        image = r;
      }
      if (op == 'Y') phase *= cplx(0, 1);
    }
    out.add(image, phase * c);
  }
  out.prune(kPruneThreshold);
  return PauliSum::from_operator(out);
}

PauliSum taper_parity_h2(const PauliSum& parity_operator, int z1, int z3) {
  if (parity_operator.n_qubits() != 4) throw ConfigError("H2 tapering expects a four-qubit operator");
  PauliSum out(2);
  for (const auto& [p, c] : parity_operator.terms()) {
    double sign = 1.0;
    for (auto [q, z] : {std::pair{1, z1}, std::pair{3, z3}}) {
      char op = p.at(q);
      if (op == 'X' || op == 'Y') {
        throw NumericalError("term " + p.label() + " does not commute with Z" + std::to_string(q));
      }
      if (op == 'Z') sign *= z;
    }
    PauliString reduced = PauliString::identity(2);
    reduced.set(0, p.at(0));
    reduced.set(1, p.at(2));
    out.add(reduced, sign * c);
  }
  out.prune(kPruneThreshold);
  return out;
}

TaperedH2 parity_map_reduce_h2(const chem::MoHamiltonian& h) {
  if (h.n_spin_orbitals() != 4 || h.n_alpha + h.n_beta != 2) {
    throw ConfigError("H2 reduction needs 4 spin orbitals and 2 electrons");
  }
  PauliSum jw = jordan_wigner(h);
  PauliSum parity = parity_transform(jw);
  const double full = exact_ground(jw).energy;

  // Qubit 1 holds the alpha parity, qubit 3 the total parity.
  const int preferred_z1 = h.n_alpha % 2 == 0 ? 1 : -1;
  const int preferred_z3 = (h.n_alpha + h.n_beta) % 2 == 0 ? 1 : -1;
  std::vector<std::array<int, 2>> sectors = {{preferred_z1, preferred_z3}};
  for (int a : {1, -1})
    for (int b : {1, -1})
      if (a != preferred_z1 || b != preferred_z3) sectors.push_back({a, b});

  for (const auto& s : sectors) {
    PauliSum reduced = taper_parity_h2(parity, s[0], s[1]);
    if (std::abs(exact_ground(reduced).energy - full) < 1e-9) {
      return TaperedH2{std::move(reduced), s, full};
    }
  }
  throw NumericalError("no symmetry sector reproduces the four-qubit ground energy");
}

}  // namespace pvqe::qubitop
