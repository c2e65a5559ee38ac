#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gapwave/physics.hpp"

namespace gapwave {

using complex = std::complex<double>;

struct UniformSection {
    double width = 0.0;   // m
    double length = 0.0;  // m, axial
};

/// Staircase approximation of the taper, listed from port 1 to port 2. Both
/// ports are the host guide of width port_width.
struct SectionCascade {
    std::vector<UniformSection> sections;
    double port_width = 0.0;

    double total_length() const noexcept;
};

/// Two-port scattering parameters, normalized to the TE10 wave impedance of
/// the port guide.
struct TwoPortS {
    complex s11, s21, s12, s22;
};

struct SParamPoint {
    double frequency = 0.0;  // Hz
    TwoPortS s;
};

/// Reflection and voltage transmission at an ideal step from impedance z1 to
/// z2, seen from the z1 side: gamma = (z2 - z1)/(z2 + z1), tau = 2 z2/(z1 + z2).
struct StepCoefficients {
    double gamma = 0.0;
    double tau = 0.0;
};
StepCoefficients impedance_step(double z1, double z2);

/// n equal-length sections spanning [-a_e, a_e], each with the effective width
/// at its axial midpoint. The width list is exactly palindromic.
SectionCascade discretize_profile(const EllipticalStripProfile& profile,
                                  const WaveguideSpec& guide, std::size_t n);

/// Cascades wave transfer matrices port 1 -> port 2: a step into each
/// section, propagation exp(-j beta l) through it, and a step back out to the
/// port guide. Throws EvanescentError carrying the offending section index.
TwoPortS cascade_sparams(const SectionCascade& cascade, double f);

/// cascade_sparams on a uniform, endpoint-inclusive frequency grid.
std::vector<SParamPoint> sweep_sparams(const EllipticalStripProfile& profile,
                                       const WaveguideSpec& guide, const FrequencyBand& band,
                                       std::size_t n_freq, std::size_t n_sections);

/// Default staircase resolution.
inline constexpr std::size_t kDefaultSections = 512;

double magnitude_db(complex v);

/// Argument in degrees, in (-180, 180].
double phase_deg(complex v);

/// Wraps degrees into (-180, 180].
double wrap_degrees(double deg);

/// Removes 360-degree jumps between consecutive samples.
std::vector<double> unwrap_degrees(std::span<const double> wrapped);

}  // namespace gapwave
