#include "gapwave/physics.hpp"

#include <cmath>
#include <string>

#include "gapwave/error.hpp"
#include "gapwave/units.hpp"

namespace gapwave {

namespace {

std::string describe(double width, double f) {
    return "TE10 mode is evanescent: width " + std::to_string(to_mm(width)) + " mm at " +
           std::to_string(to_ghz(f)) + " GHz (cutoff " +
           std::to_string(to_ghz(kSpeedOfLight / (2.0 * width))) + " GHz)";
}

}  // namespace

void validate(const FrequencyBand& band) {
    if (!(band.f_low > 0.0)) throw InvalidArgument("invariant violated: f_low > 0");
    if (!(band.f_low < band.f_high)) throw InvalidArgument("invariant violated: f_low < f_high");
}

void validate(const WaveguideSpec& guide) {
    if (!(guide.broad_wall_width > 0.0))
        throw InvalidArgument("invariant violated: broad_wall_width > 0");
    validate(guide.band);
    if (!(guide.band.f_low > cutoff_frequency(guide.broad_wall_width)))
        throw InvalidArgument(
            "invariant violated: band.f_low > cutoff_frequency(broad_wall_width)");
}

void validate(const EllipticalStripProfile& profile) {
    if (!(profile.a_e > 0.0)) throw InvalidArgument("invariant violated: a_e > 0");
    if (!(profile.b_e >= 0.0)) throw InvalidArgument("invariant violated: b_e >= 0");
}

double strip_height(double x, const EllipticalStripProfile& profile) noexcept {
    if (std::abs(x) >= profile.a_e) return 0.0;
    const double t = x / profile.a_e;
    return profile.b_e * std::sqrt(1.0 - t * t);
}

double effective_width(double x, const EllipticalStripProfile& profile,
                       const WaveguideSpec& guide) {
    const double w = guide.broad_wall_width - strip_height(x, profile);
    if (!(w > 0.0))
        throw GeometryError("strip closes the guide: b_e " + std::to_string(to_mm(profile.b_e)) +
                            " mm >= width " + std::to_string(to_mm(guide.broad_wall_width)) +
                            " mm");
    return w;
}

double cutoff_frequency(double width) {
    if (!(width > 0.0)) throw InvalidArgument("cutoff_frequency: width must be positive");
    return kSpeedOfLight / (2.0 * width);
}

bool propagates(double width, double f) noexcept {
    if (!(width > 0.0) || !(f > 0.0)) return false;
    const double ratio = (kSpeedOfLight / f) / (2.0 * width);
    return ratio < 1.0;
}

// Operation order here is mirrored by the batch kernels; keep them in sync.
double guided_beta(double width, double f) {
    if (!propagates(width, f)) throw EvanescentError(describe(width, f), width, f);
    const double lambda0 = kSpeedOfLight / f;
    const double k0 = (2.0 * kPi) / lambda0;
    const double ratio = lambda0 / (2.0 * width);
    return k0 * std::sqrt(1.0 - ratio * ratio);
}

double te10_wave_impedance(double width, double f) {
    return (2.0 * kPi * f * kMu0) / guided_beta(width, f);
}

}  // namespace gapwave
