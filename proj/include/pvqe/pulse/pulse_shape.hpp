#pragma once

#include <complex>
#include <string>
#include <vector>

namespace pvqe::pulse {

using cplx = std::complex<double>;

/// Seconds per AWG sample.
inline constexpr double kDefaultDt = 0.222e-9;
inline constexpr int kSampleGranularity = 16;
inline constexpr double kCrSigma = 64.0;

/// Single-qubit DRAG pulse parameters taken from the backend X calibration.
struct DragCalibration {
  int duration = 160;
  double sigma = 40.0;
  double beta = -0.5;
  /// Amplitude of a pi rotation about X.
  double amp_x = 1.0;
};

enum class PulseKind { Drag, GaussianSquare };

struct PulseShape {
  PulseKind kind = PulseKind::GaussianSquare;
  int duration = 0;  ///< samples
  cplx amplitude{0.0, 0.0};
  double sigma = kCrSigma;
  int width = 0;  ///< flat-top samples (GaussianSquare)
  double beta = 0.0;  ///< DRAG only

  double phase() const { return std::arg(amplitude); }
};

/// GaussianSquare with sigma = 64 and 2 sigma per flank, so width = duration - 256.
PulseShape gaussian_square(int duration, cplx amplitude);
PulseShape drag(cplx amplitude, const DragCalibration& cal = {});

/// Throws ConfigError when the shape breaks the hardware constraints.
void validate(const PulseShape& p);

/// Complex samples. GaussianSquare is sampled at k + 1/2 with lifted-Gaussian
/// flanks that vanish at the pulse edges; DRAG is sampled at integer k with
/// its peak at duration / 2.
std::vector<cplx> envelope_samples(const PulseShape& p);

/// Sum of the unit-amplitude envelope, in samples.
double envelope_area(const PulseShape& p);

/// Closed-form area of one lifted-Gaussian flank of length 2 sigma.
double flank_area(double sigma = kCrSigma);

/// Smallest GaussianSquare duration (multiple of 16, at least 4 sigma) whose
/// unit-amplitude area reaches `area`.
int gaussian_square_duration_for_area(double area);

std::string to_string(PulseKind k);

}  // namespace pvqe::pulse
