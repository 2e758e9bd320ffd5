#include "pvqe/chem/mo_hamiltonian.hpp"

#include <array>

#include <Eigen/Eigenvalues>

#include "pvqe/errors.hpp"

namespace pvqe::chem {

namespace {

void check_orbitals(const AoIntegrals& ints, const Eigen::MatrixXd& c, const char* name) {
  const auto n = static_cast<Eigen::Index>(ints.size());
  if (c.rows() != n || c.cols() != n) {
    throw ConfigError(std::string(name) + " orbital matrix has wrong dimensions");
  }
  double err = (c.transpose() * ints.overlap * c - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (err > 1e-8) throw ConfigError(std::string(name) + " orbitals are not orthonormal under S");
}

// (ij|kl) with i, j expanded in `a` and k, l in `b`.
Tensor4 transform(const Tensor4& g, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const std::size_t n = g.dim();
  Tensor4 t1(n), t2(n), t3(n), t4(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t i = 0; i < n; ++i) t1(i, q, r, s) += a(p, i) * g(p, q, r, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t j = 0; j < n; ++j) t2(i, j, r, s) += a(q, j) * t1(i, q, r, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t k = 0; k < n; ++k) t3(i, j, k, s) += b(r, k) * t2(i, j, r, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t l = 0; l < n; ++l) t4(i, j, k, l) += b(s, l) * t3(i, j, k, s);
  return t4;
}

}  // namespace

MoHamiltonian mo_hamiltonian(const AoIntegrals& ints, const Eigen::MatrixXd& c_alpha,
                             const Eigen::MatrixXd& c_beta, int n_alpha, int n_beta) {
  check_orbitals(ints, c_alpha, "alpha");
  check_orbitals(ints, c_beta, "beta");
  const std::size_t n = ints.size();
  const std::array<const Eigen::MatrixXd*, 2> c = {&c_alpha, &c_beta};

  MoHamiltonian mo;
  mo.n_alpha = n_alpha;
  mo.n_beta = n_beta;
  mo.constant = ints.nuclear_repulsion;
  mo.one_body = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  mo.two_body = Tensor4(2 * n);

  const Eigen::MatrixXd h = ints.core_hamiltonian();
  for (std::size_t s = 0; s < 2; ++s) {
    mo.one_body.block(s * n, s * n, n, n) = c[s]->transpose() * h * *c[s];
  }
  // <pq|rs> = (pr|qs): p and r share a spin, q and s share a spin.
  for (std::size_t s1 = 0; s1 < 2; ++s1) {
    for (std::size_t s2 = 0; s2 < 2; ++s2) {
      Tensor4 chem = transform(ints.eri, *c[s1], *c[s2]);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
              mo.two_body(s1 * n + p, s2 * n + q, s1 * n + r, s2 * n + s) = chem(p, r, q, s);
    }
  }
  return mo;
}

Eigen::MatrixXd lowdin_orbitals(const AoIntegrals& ints) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ints.overlap);
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace pvqe::chem
