#include "pvqe/vqe/quartic_fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "pvqe/errors.hpp"

namespace pvqe::vqe {

double QuarticFit::operator()(double x) const {
  const double u = (x - center) / scale;
  return (((coef[4] * u + coef[3]) * u + coef[2]) * u + coef[1]) * u + coef[0];
}

QuarticFit quartic_fit_min(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw ConfigError("quartic fit needs as many y values as x values");
  if (std::set<double>(xs.begin(), xs.end()).size() != xs.size()) throw ConfigError("quartic fit x values repeat");
  if (xs.size() < 6) throw ConfigError("quartic fit needs at least 6 points");

  const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *lo_it, hi = *hi_it;
  QuarticFit fit;
  fit.center = 0.5 * (lo + hi);
  fit.scale = 0.5 * (hi - lo);

  const auto m = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd v(m, 5);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double u = (xs[i] - fit.center) / fit.scale;
    double p = 1.0;
    for (int k = 0; k < 5; ++k, p *= u) v(i, k) = p;
    y(i) = ys[i];
  }
  Eigen::VectorXd c = v.colPivHouseholderQr().solve(y);
  if (!c.allFinite()) throw NumericalError("quartic fit is singular");
  for (int k = 0; k < 5; ++k) fit.coef[k] = c(k);

  // Derivative c1 + 2 c2 u + 3 c3 u^2 + 4 c4 u^3 with negligible leading
  // terms dropped so the companion matrix stays well conditioned.
  std::vector<double> d{c(1), 2 * c(2), 3 * c(3), 4 * c(4)};
  const double dmax = std::max({std::abs(d[0]), std::abs(d[1]), std::abs(d[2]), std::abs(d[3])});
  while (d.size() > 1 && std::abs(d.back()) <= 1e-10 * dmax) d.pop_back();
  auto deriv = [&](double u) {
    double r = 0.0;
    for (auto k = d.size(); k-- > 0;) r = r * u + d[k];
    return r;
  };
  auto deriv2 = [&](double u) {
    double r = 0.0;
    for (auto k = d.size(); k-- > 1;) r = r * u + static_cast<double>(k) * d[k];
    return r;
  };

  std::vector<double> roots;
  if (d.size() > 1) {
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(Eigen::Map<Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size())));
    for (const auto& r : solver.roots()) {
      if (std::abs(r.imag()) > 1e-8 * std::max(1.0, std::abs(r))) continue;
      double u = r.real();
      for (int it = 0; it < 20; ++it) {
        const double h = deriv2(u);
        if (h == 0.0) break;
        const double step = deriv(u) / h;
        u -= step;
        if (std::abs(step) < 1e-15) break;
      }
      roots.push_back(u);
    }
  }

  std::sort(roots.begin(), roots.end());
  fit.interior = false;
  for (double u : roots) {
    if (u < -1.0 - 1e-12 || u > 1.0 + 1e-12 || deriv2(u) <= 0.0) continue;
    const double x = fit.center + fit.scale * u;
    const double val = fit(x);
    if (!fit.interior || val < fit.y_min - 1e-14) {
      fit.interior = true;
      fit.x_min = x;
      fit.y_min = val;
    }
  }
  if (!fit.interior) {
    fit.x_min = fit(lo) <= fit(hi) ? lo : hi;
    fit.y_min = fit(fit.x_min);
  }
  return fit;
}

}  // namespace pvqe::vqe
