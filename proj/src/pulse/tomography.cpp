#include "pvqe/pulse/tomography.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "pvqe/errors.hpp"
#include "pvqe/pulse/cr_dynamics.hpp"

namespace pvqe::pulse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMinTimePoints = 12;

// Bloch vector of |0> after rotating by |w| t about w.
Eigen::Vector3d rotate_z(const Eigen::Vector3d& w, double t) {
  const double norm = w.norm();
  if (norm * t == 0.0) return Eigen::Vector3d::UnitZ();
  return Eigen::AngleAxisd(norm * t, w / norm) * Eigen::Vector3d::UnitZ();
}

struct RotationResidual : Eigen::DenseFunctor<double> {
  const std::vector<double>& times;
  const std::vector<Eigen::Vector3d>& data;
  double scale;

  RotationResidual(const std::vector<double>& t, const std::vector<Eigen::Vector3d>& d, double s)
      : Eigen::DenseFunctor<double>(3, static_cast<int>(3 * t.size())), times(t), data(d), scale(s) {}

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& r) const {
    const Eigen::Vector3d w = p * scale;
    for (std::size_t k = 0; k < times.size(); ++k) {
      r.segment<3>(static_cast<Eigen::Index>(3 * k)) = rotate_z(w, times[k]) - data[k];
    }
    return 0;
  }
};

// Each component of a rotating Bloch vector is a + b cos(wt) + c sin(wt).
// Scan w, keep the best linear fit, and read the axis off the coefficients.
Eigen::Vector3d initial_guess(const std::vector<double>& times, const std::vector<Eigen::Vector3d>& data) {
  const auto n = static_cast<Eigen::Index>(times.size());
  const double span = times.back() - times.front();
  double min_step = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < times.size(); ++k) min_step = std::min(min_step, times[k] - times[k - 1]);
  const double w_lo = std::numbers::pi / span;
  const double w_hi = std::numbers::pi / min_step;
  const double w_step = 0.02 * std::numbers::pi / span;

  double best_cost = std::numeric_limits<double>::infinity();
  double best_w = w_lo;
  Eigen::Matrix3d best_coef;
  Eigen::MatrixXd design(n, 3), rhs(n, 3);
  for (Eigen::Index k = 0; k < n; ++k) rhs.row(k) = data[static_cast<std::size_t>(k)].transpose();
  for (double w = w_lo; w <= w_hi; w += w_step) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double t = times[static_cast<std::size_t>(k)];
      design(k, 0) = 1.0;
      design(k, 1) = std::cos(w * t);
      design(k, 2) = std::sin(w * t);
    }
    Eigen::Matrix3d coef = design.colPivHouseholderQr().solve(rhs);
    const double cost = (design * coef - rhs).squaredNorm();
    if (cost < best_cost) {
      best_cost = cost;
      best_w = w;
      best_coef = coef;
    }
  }
  // Columns are x, y, z; rows are constant, cosine, sine.
  const double nx = -best_coef(2, 1);
  const double ny = best_coef(2, 0);
  double nz = std::sqrt(std::max(0.0, best_coef(0, 2)));
  if (best_coef(0, 0) * nx + best_coef(0, 1) * ny < 0) nz = -nz;
  Eigen::Vector3d axis(nx, ny, nz);
  if (axis.norm() == 0.0) axis = Eigen::Vector3d::UnitX();
  return best_w * axis.normalized();
}

Eigen::Vector3d fit_one(const std::vector<double>& times, const std::vector<Eigen::Vector3d>& data) {
  double deviation = 0.0;
  for (const auto& r : data) deviation = std::max(deviation, (r - Eigen::Vector3d::UnitZ()).norm());
  if (deviation < 1e-12) return Eigen::Vector3d::Zero();

  const Eigen::Vector3d guess = initial_guess(times, data);
  const double scale = std::max(guess.norm(), 1.0);
  RotationResidual residual(times, data, scale);
  Eigen::NumericalDiff<RotationResidual, Eigen::Central> functor(residual);
  Eigen::LevenbergMarquardt<decltype(functor)> lm(functor);
  lm.setXtol(1e-15);
  lm.setFtol(1e-15);
  lm.setMaxfev(2000);
  Eigen::VectorXd p = guess / scale;
  lm.minimize(p);
  return p * scale;
}

}  // namespace

double sampling_window(const CrModel& m, int count, double t_max) {
  if (count < 2 || !(t_max > 0)) throw ConfigError("need at least two times and t_max > 0");
  const Eigen::Vector3d zb(m.zx, m.zy, m.zz), ib(m.ix, m.iy, m.iz);
  const double fastest = std::max((ib + zb).norm(), (ib - zb).norm());
  if (fastest == 0.0) return t_max;
  return std::min(t_max, (count - 1) / (4.0 * fastest));
}

std::vector<double> linspace_times(double t_max, int count) {
  if (count < 2 || !(t_max > 0)) throw ConfigError("need at least two times and t_max > 0");
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) t[static_cast<std::size_t>(k)] = t_max * k / (count - 1);
  return t;
}

TomographyTraces tomography_traces(const CrModel& m, const std::vector<double>& times) {
  const Eigen::Matrix4cd g = cr_generator(m, 0.0);
  TomographyTraces out;
  out.times = times;
  for (double t : times) {
    if (!(t >= 0)) throw ConfigError("tomography times must be non-negative");
    const Eigen::Matrix4cd u = expm_hermitian(g, t);
    for (int c = 0; c < 2; ++c) {
      // Amplitudes of |c,0> and |c,1>; the control stays diagonal under Z (x) B.
      const std::complex<double> a0 = u(2 * c, 2 * c), a1 = u(2 * c + 1, 2 * c);
      out.bloch[c].emplace_back(2 * std::real(std::conj(a0) * a1), 2 * std::imag(std::conj(a0) * a1),
                                std::norm(a0) - std::norm(a1));
    }
  }
  return out;
}

TomographyFit fit_tomography(const TomographyTraces& traces, double max_residual) {
  const auto& t = traces.times;
  if (static_cast<int>(t.size()) < kMinTimePoints) {
    throw ConfigError("tomography needs at least " + std::to_string(kMinTimePoints) + " time points");
  }
  for (const auto& b : traces.bloch) {
    if (b.size() != t.size()) throw ConfigError("trace length does not match time count");
  }
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!(t[k] > t[k - 1])) throw ConfigError("tomography times must be strictly increasing");
  }

  TomographyFit fit;
  double sq = 0.0;
  for (int c = 0; c < 2; ++c) {
    fit.omega[c] = fit_one(t, traces.bloch[c]);
    for (std::size_t k = 0; k < t.size(); ++k) sq += (rotate_z(fit.omega[c], t[k]) - traces.bloch[c][k]).squaredNorm();
  }
  fit.residual = std::sqrt(sq / (6.0 * static_cast<double>(t.size())));
  if (!(fit.residual <= max_residual)) {
    std::ostringstream msg;
    msg << "tomography fit residual " << fit.residual << " exceeds " << max_residual;
    throw NumericalError(msg.str());
  }

  const Eigen::Vector3d nu0 = fit.omega[0] / kTwoPi, nu1 = fit.omega[1] / kTwoPi;
  const Eigen::Vector3d zb = 0.5 * (nu0 - nu1), ib = 0.5 * (nu0 + nu1);
  fit.model.zx = zb.x();
  fit.model.zy = zb.y();
  fit.model.zz = zb.z();
  fit.model.ix = ib.x();
  fit.model.iy = ib.y();
  fit.model.iz = ib.z();
  return fit;
}

void write_traces_csv(std::ostream& out, const TomographyTraces& traces) {
  out << "time_s,x0,y0,z0,x1,y1,z1\n";
  char buf[256];
  for (std::size_t k = 0; k < traces.times.size(); ++k) {
    const auto& a = traces.bloch[0][k];
    const auto& b = traces.bloch[1][k];
    std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e\n", traces.times[k], a.x(), a.y(),
                  a.z(), b.x(), b.y(), b.z());
    out << buf;
  }
}

}  // namespace pvqe::pulse
