#pragma once

#include <numbers>

// Internal quantities are SI (m, Hz, rad). Conversion to mm / GHz / degrees
// happens only at the I/O boundary.
namespace gapwave {

inline constexpr double kSpeedOfLight = 299792458.0;            // m/s
inline constexpr double kMu0 = 1.25663706212e-6;                 // H/m
inline constexpr double kEta0 = kMu0 * kSpeedOfLight;            // ~376.73 ohm
inline constexpr double kPi = std::numbers::pi;

constexpr double mm(double v) { return v * 1e-3; }
constexpr double ghz(double v) { return v * 1e9; }
constexpr double to_mm(double meters) { return meters * 1e3; }
constexpr double to_ghz(double hertz) { return hertz * 1e-9; }
constexpr double to_degrees(double rad) { return rad * (180.0 / kPi); }
constexpr double to_radians(double deg) { return deg * (kPi / 180.0); }

}  // namespace gapwave
