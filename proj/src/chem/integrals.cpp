#include "pvqe/chem/integrals.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "pvqe/errors.hpp"

namespace pvqe::chem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoysSeriesThreshold = 1e-3;

// Primitive normalized s Gaussian with its contraction weight folded in.
struct Primitive {
  double exponent;
  double weight;
  Eigen::Vector3d center;
};

std::vector<std::vector<Primitive>> expand(const Geometry& g, const std::vector<BasisShell>& basis) {
  std::vector<std::vector<Primitive>> out;
  for (const auto& shell : basis) {
    validate(shell);
    if (shell.center >= g.size()) throw ConfigError("basis shell center out of range");
    std::vector<Primitive> prims;
    for (std::size_t k = 0; k < shell.exponents.size(); ++k) {
      double a = shell.exponents[k];
      double norm = std::pow(2.0 * a / kPi, 0.75);
      prims.push_back({a, shell.coefficients[k] * norm, g.atoms()[shell.center]});
    }
    out.push_back(std::move(prims));
  }
  return out;
}

double overlap_prim(const Primitive& a, const Primitive& b) {
  double p = a.exponent + b.exponent;
  double mu = a.exponent * b.exponent / p;
  double r2 = (a.center - b.center).squaredNorm();
  return std::pow(kPi / p, 1.5) * std::exp(-mu * r2);
}

double kinetic_prim(const Primitive& a, const Primitive& b) {
  double p = a.exponent + b.exponent;
  double mu = a.exponent * b.exponent / p;
  double r2 = (a.center - b.center).squaredNorm();
  return mu * (3.0 - 2.0 * mu * r2) * overlap_prim(a, b);
}

double nuclear_prim(const Primitive& a, const Primitive& b, const Eigen::Vector3d& c) {
  double p = a.exponent + b.exponent;
  double mu = a.exponent * b.exponent / p;
  double r2 = (a.center - b.center).squaredNorm();
  Eigen::Vector3d gp = (a.exponent * a.center + b.exponent * b.center) / p;
  return -2.0 * kPi / p * std::exp(-mu * r2) * boys_f0(p * (gp - c).squaredNorm());
}

double eri_prim(const Primitive& a, const Primitive& b, const Primitive& c, const Primitive& d) {
  double p = a.exponent + b.exponent;
  double q = c.exponent + d.exponent;
  Eigen::Vector3d gp = (a.exponent * a.center + b.exponent * b.center) / p;
  Eigen::Vector3d gq = (c.exponent * c.center + d.exponent * d.center) / q;
  double kab = std::exp(-a.exponent * b.exponent / p * (a.center - b.center).squaredNorm());
  double kcd = std::exp(-c.exponent * d.exponent / q * (c.center - d.center).squaredNorm());
  double t = p * q / (p + q) * (gp - gq).squaredNorm();
  return 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)) * kab * kcd * boys_f0(t);
}

}  // namespace

double boys_f0(double x) {
  if (!(x >= 0.0)) throw ConfigError("boys_f0 requires x >= 0");
  if (x < kBoysSeriesThreshold) {
    // F0(x) = sum_k (-x)^k / (k! (2k+1)); four terms reach 1e-16 below the threshold.
    return 1.0 - x / 3.0 + x * x / 10.0 - x * x * x / 42.0 + x * x * x * x / 216.0;
  }
  double r = std::sqrt(x);
  return 0.5 * std::sqrt(kPi / x) * std::erf(r);
}

AoIntegrals ao_integrals(const Geometry& g, const std::vector<BasisShell>& basis) {
  auto shells = expand(g, basis);
  const std::size_t n = shells.size();

  // Renormalize each contraction so the diagonal of S is exactly one.
  for (auto& prims : shells) {
    double self = 0.0;
    for (const auto& a : prims)
      for (const auto& b : prims) self += a.weight * b.weight * overlap_prim(a, b);
    double scale = 1.0 / std::sqrt(self);
    for (auto& a : prims) a.weight *= scale;
  }

  AoIntegrals out;
  out.overlap = Eigen::MatrixXd::Zero(n, n);
  out.kinetic = Eigen::MatrixXd::Zero(n, n);
  out.nuclear = Eigen::MatrixXd::Zero(n, n);
  out.eri = Tensor4(n);
  out.nuclear_repulsion = nuclear_repulsion(g);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0, t = 0, v = 0;
      for (const auto& a : shells[i]) {
        for (const auto& b : shells[j]) {
          double w = a.weight * b.weight;
          s += w * overlap_prim(a, b);
          t += w * kinetic_prim(a, b);
          for (const auto& atom : g.atoms()) v += w * nuclear_prim(a, b, atom);
        }
      }
      out.overlap(i, j) = out.overlap(j, i) = s;
      out.kinetic(i, j) = out.kinetic(j, i) = t;
      out.nuclear(i, j) = out.nuclear(j, i) = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.overlap(i, i) = 1.0;

  // Unique quartets only, scattered over the 8-fold permutation group.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      std::size_t pq = p * (p + 1) / 2 + q;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s <= r; ++s) {
          std::size_t rs = r * (r + 1) / 2 + s;
          if (rs > pq) continue;
          double v = 0.0;
          for (const auto& a : shells[p])
            for (const auto& b : shells[q])
              for (const auto& c : shells[r])
                for (const auto& d : shells[s])
                  v += a.weight * b.weight * c.weight * d.weight * eri_prim(a, b, c, d);
          auto& G = out.eri;
          G(p, q, r, s) = G(q, p, r, s) = G(p, q, s, r) = G(q, p, s, r) = v;
          G(r, s, p, q) = G(s, r, p, q) = G(r, s, q, p) = G(s, r, q, p) = v;
        }
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.overlap, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < 1e-10) {
    throw NumericalError("basis is linearly dependent (smallest overlap eigenvalue " +
                         std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
  return out;
}

}  // namespace pvqe::chem
