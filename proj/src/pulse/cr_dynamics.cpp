#include "pvqe/pulse/cr_dynamics.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "pvqe/errors.hpp"

namespace pvqe::pulse {

namespace {

using cplx = std::complex<double>;

Eigen::Matrix2cd pauli(char c) {
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Matrix4cd control_x() { return kron(pauli('X'), pauli('I')); }

}  // namespace

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed in expm_hermitian");
  Eigen::VectorXcd phases = (-cplx(0, 1) * t * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Eigen::Matrix4cd cr_generator(const CrModel& m, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  const double zx = c * m.zx - s * m.zy;
  const double zy = s * m.zx + c * m.zy;
  const double ix = c * m.ix - s * m.iy;
  const double iy = s * m.ix + c * m.iy;
  Eigen::Matrix2cd b = m.zi * pauli('I') + zx * pauli('X') + zy * pauli('Y') + m.zz * pauli('Z');
  Eigen::Matrix2cd cc = ix * pauli('X') + iy * pauli('Y') + m.iz * pauli('Z');
  return std::numbers::pi * (kron(pauli('Z'), b) + kron(pauli('I'), cc));
}

Eigen::Matrix4cd cr_unitary_area(const CrModel& m, double amplitude, double area, double phi, double dt) {
  if (!(std::abs(amplitude) <= 1.0 + 1e-12)) throw ConfigError("CR amplitude exceeds 1");
  if (amplitude == 0.0 || area == 0.0) return Eigen::Matrix4cd::Identity();
  const double drive_phase = amplitude < 0 ? phi + std::numbers::pi : phi;
  return expm_hermitian(cr_generator(m, drive_phase), std::abs(amplitude) * area * dt);
}

Eigen::Matrix4cd cr_unitary(const CrModel& m, const PulseShape& p, double phi, double dt) {
  if (p.kind != PulseKind::GaussianSquare) throw ConfigError("CR drive must be a GaussianSquare pulse");
  const double amp = std::abs(p.amplitude);
  if (amp == 0.0) return Eigen::Matrix4cd::Identity();
  return cr_unitary_area(m, amp, envelope_area(p), phi + p.phase(), dt);
}

Eigen::Matrix4cd echoed_cr_unitary_area(const CrModel& m, double amplitude, double area, double dt) {
  const Eigen::Matrix4cd xc = control_x();
  return xc * cr_unitary_area(m, amplitude, area / 2, std::numbers::pi, dt) * xc *
         cr_unitary_area(m, amplitude, area / 2, 0.0, dt);
}

Eigen::Matrix4cd echoed_cr_unitary(const CrModel& m, const PulseShape& p, double dt) {
  if (p.kind != PulseKind::GaussianSquare) throw ConfigError("CR drive must be a GaussianSquare pulse");
  // Rotate the model into the drive frame so the echo phases are relative to it.
  CrModel framed = m;
  const double c = std::cos(p.phase()), s = std::sin(p.phase());
  framed.zx = c * m.zx - s * m.zy;
  framed.zy = s * m.zx + c * m.zy;
  framed.ix = c * m.ix - s * m.iy;
  framed.iy = s * m.ix + c * m.iy;
  return echoed_cr_unitary_area(framed, std::abs(p.amplitude), envelope_area(p), dt);
}

Eigen::Matrix4cd echo_kept_generator(const CrModel& m) {
  CrModel kept;
  kept.zx = m.zx;
  kept.zy = m.zy;
  kept.iz = m.iz;
  return cr_generator(kept, 0.0);
}

Eigen::Matrix2cd rx_unitary(double amplitude, double amp_x) {
  if (!(std::abs(amplitude) <= 1.0 + 1e-12)) throw ConfigError("single-qubit pulse amplitude exceeds 1");
  if (!(amp_x > 0)) throw ConfigError("X calibration amplitude must be positive");
  const double theta = std::numbers::pi * amplitude / amp_x;
  Eigen::Matrix2cd u;
  u << std::cos(theta / 2), cplx(0, -std::sin(theta / 2)), cplx(0, -std::sin(theta / 2)), std::cos(theta / 2);
  return u;
}

Eigen::Matrix2cd ry_unitary(double theta) {
  Eigen::Matrix2cd u;
  u << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  return u;
}

Eigen::Matrix2cd rz_unitary(double phi) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::polar(1.0, -phi / 2);
  u(1, 1) = std::polar(1.0, phi / 2);
  return u;
}

std::vector<DynamicsPoint> cr_dynamics(const CrModel& m, const std::vector<int>& durations, double dt) {
  CrModel zx_only;
  zx_only.zx = m.zx;
  std::vector<DynamicsPoint> out;
  out.reserve(durations.size());
  auto populations = [](const Eigen::Matrix4cd& u, int control) {
    Populations p{};
    const Eigen::Vector4cd col = u.col(2 * control);
    for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = std::norm(col(i));
    return p;
  };
  for (int d : durations) {
    auto pulse = gaussian_square(d, 1.0);
    DynamicsPoint pt;
    pt.duration = d;
    pt.time_s = d * dt;
    const Eigen::Matrix4cd plain = cr_unitary(m, pulse, 0.0, dt);
    const Eigen::Matrix4cd echoed = echoed_cr_unitary(m, pulse, dt);
    const Eigen::Matrix4cd reference = cr_unitary(zx_only, pulse, 0.0, dt);
    for (int c = 0; c < 2; ++c) {
      pt.plain[c] = populations(plain, c);
      // The echo flips the control twice, so it ends where it started.
      pt.echoed[c] = populations(echoed, c);
      pt.zx_only[c] = populations(reference, c);
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace pvqe::pulse
