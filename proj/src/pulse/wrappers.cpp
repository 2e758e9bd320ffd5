#include "pvqe/pulse/wrappers.hpp"

#include <algorithm>
#include <cmath>

#include "pvqe/errors.hpp"
#include "pvqe/pulse/pulse_shape.hpp"

namespace pvqe::pulse {

double wrap_amplitude(double theta) {
  if (!std::isfinite(theta)) throw ConfigError("amplitude parameter is not finite");
  return std::sin(theta);
}

int wrap_duration(double theta) {
  if (!std::isfinite(theta)) throw ConfigError("duration parameter is not finite");
  constexpr double mid = 0.5 * (kMinCrDuration + kMaxCrDuration);
  constexpr double half_range = 0.5 * (kMaxCrDuration - kMinCrDuration);
  const double raw = mid + half_range * std::sin(theta);
  const int d = kSampleGranularity * static_cast<int>(std::lround(raw / kSampleGranularity));
  return std::clamp(d, kMinCrDuration, kMaxCrDuration);
}

}  // namespace pvqe::pulse
