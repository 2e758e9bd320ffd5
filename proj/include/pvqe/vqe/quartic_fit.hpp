#pragma once

#include <array>
#include <vector>

namespace pvqe::vqe {

/// Least-squares quartic in u = (x - center) / scale.
struct QuarticFit {
  std::array<double, 5> coef{};  ///< c0 + c1 u + ... + c4 u^4
  double center = 0.0;
  double scale = 1.0;
  double x_min = 0.0;
  double y_min = 0.0;
  /// False when no stationary minimum lies inside the data range and x_min is
  /// the lower endpoint.
  bool interior = true;

  double operator()(double x) const;
};

/// Needs at least 6 distinct points. The minimum is the real root of the
/// derivative inside [min x, max x] with the lowest fitted value; ties go to
/// the smaller x.
QuarticFit quartic_fit_min(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace pvqe::vqe
