#pragma once

// Cross-section geometry of the strip-narrowed guide and TE10 dispersion.

namespace gapwave {

struct FrequencyBand {
    double f_low = 0.0;   // Hz
    double f_high = 0.0;  // Hz

    double center() const noexcept { return 0.5 * (f_low + f_high); }
};

/// Host rectangular guide. broad_wall_width is the H-plane dimension that the
/// strip narrows.
struct WaveguideSpec {
    double broad_wall_width = 0.0;  // m
    FrequencyBand band;
};

/// Strip contour: half an ellipse of semi-axes a_e (axial) and b_e (deflection
/// into the guide), centred on x = 0.
struct EllipticalStripProfile {
    double a_e = 0.0;  // m
    double b_e = 0.0;  // m
};

/// Throws InvalidArgument naming the violated invariant.
void validate(const FrequencyBand& band);
void validate(const WaveguideSpec& guide);
void validate(const EllipticalStripProfile& profile);

/// h_e(x) = b_e * sqrt(1 - (x/a_e)^2) inside the strip, 0 outside.
double strip_height(double x, const EllipticalStripProfile& profile) noexcept;

/// Local broad-wall width w - h_e(x). Throws GeometryError when the strip
/// would close the guide.
double effective_width(double x, const EllipticalStripProfile& profile,
                       const WaveguideSpec& guide);

/// TE10 cutoff c / (2 width). Throws InvalidArgument for width <= 0.
double cutoff_frequency(double width);

/// TE10 phase constant in rad/m. Throws EvanescentError at or below cutoff.
double guided_beta(double width, double f);

/// TE-mode field impedance 2*pi*f*mu0 / beta in ohm. Throws EvanescentError at
/// or below cutoff.
double te10_wave_impedance(double width, double f);

/// True when the TE10 mode of `width` propagates at `f`.
bool propagates(double width, double f) noexcept;

}  // namespace gapwave
