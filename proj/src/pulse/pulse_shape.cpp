#include "pvqe/pulse/pulse_shape.hpp"

#include <cmath>
#include <numbers>

#include "pvqe/errors.hpp"

namespace pvqe::pulse {

namespace {

constexpr int kFlankSigmas = 2;

int flank_samples(double sigma) { return static_cast<int>(std::lround(kFlankSigmas * sigma)); }

// Gaussian centred at `center`, shifted and rescaled so it is 0 at distance
// `zero_at` and 1 at the centre.
double lifted_gaussian(double t, double center, double sigma, double zero_at) {
  const double floor = std::exp(-zero_at * zero_at / (2 * sigma * sigma));
  const double g = std::exp(-(t - center) * (t - center) / (2 * sigma * sigma));
  return (g - floor) / (1.0 - floor);
}

}  // namespace

PulseShape gaussian_square(int duration, cplx amplitude) {
  PulseShape p;
  p.kind = PulseKind::GaussianSquare;
  p.duration = duration;
  p.amplitude = amplitude;
  p.sigma = kCrSigma;
  p.width = duration - 2 * flank_samples(kCrSigma);
  validate(p);
  return p;
}

PulseShape drag(cplx amplitude, const DragCalibration& cal) {
  PulseShape p;
  p.kind = PulseKind::Drag;
  p.duration = cal.duration;
  p.amplitude = amplitude;
  p.sigma = cal.sigma;
  p.beta = cal.beta;
  validate(p);
  return p;
}

void validate(const PulseShape& p) {
  if (p.duration < 0 || p.duration % kSampleGranularity != 0) {
    throw ConfigError("pulse duration " + std::to_string(p.duration) + " is not a multiple of 16");
  }
  if (!(std::abs(p.amplitude) <= 1.0 + 1e-12)) throw ConfigError("pulse amplitude exceeds 1");
  if (!(p.sigma > 0)) throw ConfigError("pulse sigma must be positive");
  if (p.kind == PulseKind::GaussianSquare) {
    if (p.width < 0) throw ConfigError("GaussianSquare width is negative");
    if (p.width + 2 * flank_samples(p.sigma) != p.duration) {
      throw ConfigError("GaussianSquare duration must equal width + 4 sigma");
    }
  }
}

std::vector<cplx> envelope_samples(const PulseShape& p) {
  validate(p);
  std::vector<cplx> out(static_cast<std::size_t>(p.duration));
  if (p.kind == PulseKind::GaussianSquare) {
    const double rise = 2.0 * p.sigma;
    const double fall_start = rise + p.width;
    for (int k = 0; k < p.duration; ++k) {
      const double t = k + 0.5;
      double f = 1.0;
      if (t < rise) f = lifted_gaussian(t, rise, p.sigma, rise);
      else if (t > fall_start) f = lifted_gaussian(t, fall_start, p.sigma, rise);
      out[static_cast<std::size_t>(k)] = p.amplitude * f;
    }
  } else {
    // Integer sample times put one sample on the peak; the lift vanishes one
    // sample outside the pulse on either side.
    const double center = 0.5 * p.duration;
    const double zero_at = center + 1.0;
    const double floor = std::exp(-zero_at * zero_at / (2 * p.sigma * p.sigma));
    for (int k = 0; k < p.duration; ++k) {
      const double t = k;
      const double g = lifted_gaussian(t, center, p.sigma, zero_at);
      const double dg = -(t - center) / (p.sigma * p.sigma) * (g + floor / (1.0 - floor));
      out[static_cast<std::size_t>(k)] = p.amplitude * cplx(g, p.beta * dg);
    }
  }
  return out;
}

double envelope_area(const PulseShape& p) {
  PulseShape unit = p;
  unit.amplitude = 1.0;
  double area = 0.0;
  for (const auto& s : envelope_samples(unit)) area += s.real();
  return area;
}

double flank_area(double sigma) {
  const double floor = std::exp(-2.0);
  return (sigma * std::sqrt(std::numbers::pi / 2.0) * std::erf(std::sqrt(2.0)) - 2.0 * sigma * floor) /
         (1.0 - floor);
}

int gaussian_square_duration_for_area(double area) {
  const int min_duration = 2 * flank_samples(kCrSigma);
  int duration = min_duration;
  while (envelope_area(gaussian_square(duration, 1.0)) < area) duration += kSampleGranularity;
  return duration;
}

std::string to_string(PulseKind k) { return k == PulseKind::Drag ? "drag" : "gaussian_square"; }

}  // namespace pvqe::pulse
