#include "pvqe/chem/hartree_fock.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "pvqe/errors.hpp"

namespace pvqe::chem {

namespace {

struct Orbitals {
  Eigen::MatrixXd c;
  Eigen::VectorXd eps;
};

Orbitals diagonalize(const Eigen::MatrixXd& fock, const Eigen::MatrixXd& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.transpose() * fock * x);
  return {x * es.eigenvectors(), es.eigenvalues()};
}

Eigen::MatrixXd density(const Eigen::MatrixXd& c, int occupied) {
  auto occ = c.leftCols(occupied);
  return occ * occ.transpose();
}

// Coulomb matrix J[D] and exchange matrix K[D] from chemist-notation ERIs.
void coulomb_exchange(const Tensor4& g, const Eigen::MatrixXd& d, Eigen::MatrixXd& j, Eigen::MatrixXd& k) {
  const auto n = static_cast<Eigen::Index>(g.dim());
  j = Eigen::MatrixXd::Zero(n, n);
  k = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s) {
          j(p, q) += g(p, q, r, s) * d(r, s);
          k(p, q) += g(p, r, q, s) * d(r, s);
        }
}

struct Densities {
  Eigen::MatrixXd alpha;
  Eigen::MatrixXd beta;
};

struct Focks {
  Eigen::MatrixXd alpha;
  Eigen::MatrixXd beta;
  double energy;
};

Focks build_fock(const AoIntegrals& ints, const Eigen::MatrixXd& h, const Densities& d) {
  Eigen::MatrixXd ja, ka, jb, kb;
  coulomb_exchange(ints.eri, d.alpha, ja, ka);
  coulomb_exchange(ints.eri, d.beta, jb, kb);
  Focks f;
  f.alpha = h + ja + jb - ka;
  f.beta = h + ja + jb - kb;
  Eigen::MatrixXd dt = d.alpha + d.beta;
  f.energy = 0.5 * ((dt.cwiseProduct(h)).sum() + (d.alpha.cwiseProduct(f.alpha)).sum() +
                    (d.beta.cwiseProduct(f.beta)).sum()) +
             ints.nuclear_repulsion;
  return f;
}

}  // namespace

ScfResult hartree_fock(const AoIntegrals& ints, int n_alpha, int n_beta, const ScfOptions& opts) {
  const auto n = static_cast<int>(ints.size());
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n || n_beta > n) {
    throw ConfigError("electron counts do not fit in " + std::to_string(n) + " orbitals");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_es(ints.overlap);
  Eigen::MatrixXd x = s_es.eigenvectors() * s_es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                      s_es.eigenvectors().transpose();
  const Eigen::MatrixXd h = ints.core_hamiltonian();

  Orbitals guess = diagonalize(h, x);
  Densities d{density(guess.c, n_alpha), density(guess.c, n_beta)};

  ScfResult result;
  result.restricted = n_alpha == n_beta;
  result.n_alpha = n_alpha;
  result.n_beta = n_beta;
  Focks fock = build_fock(ints, h, d);
  result.energy_trace.push_back(fock.energy);

  int oscillations = 0;
  int converged_at = 0;
  for (int iter = 1; converged_at > 0 || iter <= opts.max_iterations; ++iter) {
    Orbitals oa = diagonalize(fock.alpha, x);
    Orbitals ob = result.restricted ? oa : diagonalize(fock.beta, x);
    Densities proposed{density(oa.c, n_alpha), density(ob.c, n_beta)};
    double change = std::max((proposed.alpha - d.alpha).cwiseAbs().maxCoeff(),
                             (proposed.beta - d.beta).cwiseAbs().maxCoeff());
    if (converged_at == 0 && change < opts.density_tolerance) converged_at = iter;
    // Keep iterating past the tolerance so that orbital coefficients fixed at
    // zero by symmetry come out as zero rather than as 1e-10 noise.
    if (converged_at > 0 &&
        (change < opts.polish_tolerance || iter - converged_at >= opts.polish_iterations)) {
      Focks final_fock = build_fock(ints, h, proposed);
      result.c_alpha = oa.c;
      result.c_beta = ob.c;
      result.eps_alpha = oa.eps;
      result.eps_beta = ob.eps;
      result.energy = final_fock.energy;
      result.iterations = converged_at;
      return result;
    }

    // Accept only steps that lower the energy; shrink the mixing otherwise.
    double step = result.damped ? opts.damping : 1.0;
    Densities next;
    Focks next_fock;
    for (;;) {
      next.alpha = d.alpha + step * (proposed.alpha - d.alpha);
      next.beta = d.beta + step * (proposed.beta - d.beta);
      next_fock = build_fock(ints, h, next);
      if (next_fock.energy <= fock.energy + 1e-12 || step < 1e-4) break;
      if (++oscillations >= opts.oscillation_limit) result.damped = true;
      step *= 0.5;
    }
    d = std::move(next);
    fock = std::move(next_fock);
    result.energy_trace.push_back(fock.energy);
  }

  std::ostringstream msg;
  msg << "SCF did not converge in " << opts.max_iterations << " iterations (last energy "
      << fock.energy << " Ha)";
  throw NumericalError(msg.str());
}

}  // namespace pvqe::chem
