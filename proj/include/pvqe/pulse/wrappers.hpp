#pragma once

namespace pvqe::pulse {

inline constexpr int kMinCrDuration = 256;
inline constexpr int kMaxCrDuration = 1040;

/// sin(theta), so any real parameter lands in [-1, 1].
double wrap_amplitude(double theta);

/// 16 * round((648 + 392 sin(theta)) / 16), clamped to [256, 1040].
int wrap_duration(double theta);

}  // namespace pvqe::pulse
