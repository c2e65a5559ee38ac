#include "gapwave/tmm.hpp"

#include <array>
#include <cmath>
#include <string>

#include "gapwave/error.hpp"
#include "gapwave/parallel.hpp"
#include "gapwave/phase_model.hpp"
#include "gapwave/simd/kernels.hpp"
#include "gapwave/units.hpp"

namespace gapwave {

namespace {

// Wave transfer matrix: [b1; a1] = T [a2; b2].
struct Transfer {
    std::array<complex, 4> m{complex{1.0}, complex{0.0}, complex{0.0}, complex{1.0}};

    Transfer operator*(const Transfer& r) const {
        Transfer out;
        out.m[0] = m[0] * r.m[0] + m[1] * r.m[2];
        out.m[1] = m[0] * r.m[1] + m[1] * r.m[3];
        out.m[2] = m[2] * r.m[0] + m[3] * r.m[2];
        out.m[3] = m[2] * r.m[1] + m[3] * r.m[3];
        return out;
    }
};

Transfer junction(double z1, double z2) {
    if (z1 == z2) return {};
    const double gamma = impedance_step(z1, z2).gamma;
    const double t = std::sqrt(1.0 - gamma * gamma);
    Transfer j;
    j.m = {complex{1.0 / t}, complex{gamma / t}, complex{gamma / t}, complex{1.0 / t}};
    return j;
}

Transfer line(double beta, double length) {
    const double phi = beta * length;
    Transfer l;
    l.m = {std::polar(1.0, -phi), complex{0.0}, complex{0.0}, std::polar(1.0, phi)};
    return l;
}

TwoPortS to_s(const Transfer& t) {
    const complex inv = 1.0 / t.m[3];
    TwoPortS s;
    s.s21 = inv;
    s.s11 = t.m[1] * inv;
    s.s22 = -t.m[2] * inv;
    s.s12 = t.m[0] - t.m[1] * t.m[2] * inv;
    return s;
}

}  // namespace

double SectionCascade::total_length() const noexcept {
    double sum = 0.0;
    for (const auto& s : sections) sum += s.length;
    return sum;
}

StepCoefficients impedance_step(double z1, double z2) {
    if (!(z1 > 0.0) || !(z2 > 0.0)) throw InvalidArgument("impedance_step: impedances must be positive");
    return {(z2 - z1) / (z2 + z1), 2.0 * z2 / (z1 + z2)};
}

SectionCascade discretize_profile(const EllipticalStripProfile& profile,
                                  const WaveguideSpec& guide, std::size_t n) {
    validate(profile);
    if (n < 1) throw InvalidArgument("discretize_profile: need at least one section");
    if (!(guide.broad_wall_width > 0.0))
        throw InvalidArgument("invariant violated: broad_wall_width > 0");

    SectionCascade cascade;
    cascade.port_width = guide.broad_wall_width;
    cascade.sections.resize(n);
    const double length = 2.0 * profile.a_e / static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        const double x = -profile.a_e + (static_cast<double>(i) + 0.5) * length;
        const double w = effective_width(x, profile, guide);
        cascade.sections[i] = {w, length};
        cascade.sections[n - 1 - i] = {w, length};
    }
    // The middle section of an odd staircase sits on the apex.
    if (n % 2 == 1) cascade.sections[n / 2].width = effective_width(0.0, profile, guide);
    return cascade;
}

TwoPortS cascade_sparams(const SectionCascade& cascade, double f) {
    if (cascade.sections.empty()) throw InvalidArgument("cascade_sparams: empty cascade");
    if (!propagates(cascade.port_width, f)) guided_beta(cascade.port_width, f);

    const std::size_t n = cascade.sections.size();
    std::vector<double> widths(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& sec = cascade.sections[i];
        if (!(sec.width > 0.0) || !(sec.length > 0.0))
            throw InvalidArgument("section " + std::to_string(i) +
                                  ": invariant violated: width > 0 and length > 0");
        if (!propagates(sec.width, f))
            throw EvanescentError("section " + std::to_string(i) + " is below cutoff: width " +
                                      std::to_string(to_mm(sec.width)) + " mm at " +
                                      std::to_string(to_ghz(f)) + " GHz",
                                  sec.width, f, i);
        widths[i] = sec.width;
    }
    std::vector<double> betas(n);
    simd::guided_beta(widths, f, betas);

    const double omega_mu = 2.0 * kPi * f * kMu0;
    const double z_port = te10_wave_impedance(cascade.port_width, f);

    Transfer total;
    double z_prev = z_port;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = omega_mu / betas[i];
        total = total * junction(z_prev, z) * line(betas[i], cascade.sections[i].length);
        z_prev = z;
    }
    total = total * junction(z_prev, z_port);
    return to_s(total);
}

std::vector<SParamPoint> sweep_sparams(const EllipticalStripProfile& profile,
                                       const WaveguideSpec& guide, const FrequencyBand& band,
                                       std::size_t n_freq, std::size_t n_sections) {
    validate(band);
    const SectionCascade cascade = discretize_profile(profile, guide, n_sections);
    const std::vector<double> grid = uniform_grid(band.f_low, band.f_high, n_freq);
    std::vector<SParamPoint> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        try {
            out[i] = {grid[i], cascade_sparams(cascade, grid[i])};
        } catch (const EvanescentError& e) {
            throw EvanescentError(std::string(e.what()) + " (sweep point " +
                                      std::to_string(to_ghz(grid[i])) + " GHz)",
                                  e.width(), e.frequency(), e.section());
        }
    });
    return out;
}

double magnitude_db(complex v) { return 20.0 * std::log10(std::abs(v)); }

double wrap_degrees(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0) w += 360.0;
    if (w > 180.0) w -= 360.0;
    return w;
}

double phase_deg(complex v) { return wrap_degrees(to_degrees(std::arg(v))); }

std::vector<double> unwrap_degrees(std::span<const double> wrapped) {
    std::vector<double> out(wrapped.begin(), wrapped.end());
    double offset = 0.0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        const double step = wrapped[i] - wrapped[i - 1];
        if (step > 180.0)
            offset -= 360.0;
        else if (step < -180.0)
            offset += 360.0;
        out[i] = wrapped[i] + offset;
    }
    return out;
}

}  // namespace gapwave
