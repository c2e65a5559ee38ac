#include "gapwave/phase_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gapwave/error.hpp"
#include "gapwave/parallel.hpp"
#include "gapwave/simd/kernels.hpp"
#include "gapwave/units.hpp"

namespace gapwave {

namespace {

double half_pi() { return 0.5 * kPi; }

constexpr double kRelativeFloor = 1e-11;

std::string at(double b_e, double f) {
    return " (b_e = " + std::to_string(to_mm(b_e)) + " mm, f = " + std::to_string(to_ghz(f)) +
           " GHz)";
}

// Re-raises a domain error with the grid point appended, keeping its type.
template <class Fn>
double annotated(double b_e, double f, Fn&& fn) {
    try {
        return fn();
    } catch (const EvanescentError& e) {
        throw EvanescentError(std::string(e.what()) + at(b_e, f), e.width(), e.frequency());
    } catch (const GeometryError& e) {
        throw GeometryError(std::string(e.what()) + at(b_e, f));
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string(e.what()) + at(b_e, f));
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(std::string(e.what()) + at(b_e, f));
    }
}

}  // namespace

double total_phase(const EllipticalStripProfile& profile, const WaveguideSpec& guide, double f,
                   const QuadratureSpec& quad) {
    validate(profile);
    validate(quad);
    if (!(guide.broad_wall_width > 0.0))
        throw InvalidArgument("invariant violated: broad_wall_width > 0");

    const double narrowest = effective_width(0.0, profile, guide);
    // Worst case is the apex; every other section is wider.
    guided_beta(narrowest, f);

    const double width = guide.broad_wall_width;
    const double b_e = profile.b_e;
    std::vector<double> cosines;
    BatchIntegrand integrand = [&](std::span<const double> theta, std::span<double> y) {
        cosines.resize(theta.size());
        std::transform(theta.begin(), theta.end(), cosines.begin(),
                       [](double t) { return std::cos(t); });
        simd::strip_integrand(cosines, b_e, width, f, y);
    };

    QuadratureSpec scaled = quad;
    scaled.abs_tolerance = quad.abs_tolerance / profile.a_e;
    const QuadratureResult r = integrate(integrand, -half_pi(), half_pi(), scaled);
    return profile.a_e * r.value;
}

double phase_shift(double b_e, double a_e, const WaveguideSpec& guide, double f,
                   const QuadratureSpec& quad) {
    validate(EllipticalStripProfile{a_e, b_e});
    validate(quad);
    if (!(guide.broad_wall_width > 0.0))
        throw InvalidArgument("invariant violated: broad_wall_width > 0");
    const double width = guide.broad_wall_width;
    const double beta_ref = guided_beta(width, f);
    if (b_e == 0.0) return 0.0;
    guided_beta(effective_width(0.0, {a_e, b_e}, guide), f);

    // Integrate the difference beta(w) - beta(w - h_e) directly rather than
    // subtracting two totals of ~beta*2a_e, so small shifts keep their
    // relative accuracy.
    std::vector<double> cosines;
    BatchIntegrand integrand = [&](std::span<const double> theta, std::span<double> y) {
        cosines.resize(theta.size());
        std::transform(theta.begin(), theta.end(), cosines.begin(),
                       [](double t) { return std::cos(t); });
        simd::strip_integrand(cosines, b_e, width, f, y);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = beta_ref * cosines[i] - y[i];
    };

    // The integrand is close to D(0) cos^2(theta); its integral sets the scale
    // for the relative floor, which makes the result independent of a_e up to
    // the prefactor.
    const double apex = beta_ref - guided_beta(width - b_e, f);
    const double scale = 0.5 * kPi * apex;
    QuadratureSpec inner = quad;
    inner.abs_tolerance = std::min(quad.abs_tolerance / a_e, kRelativeFloor * scale);
    const QuadratureResult r = integrate(integrand, -half_pi(), half_pi(), inner);
    return std::max(0.0, to_degrees(a_e * r.value));
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n == 0) throw InvalidArgument("grid needs at least one point");
    std::vector<double> grid(n);
    if (n == 1) {
        grid[0] = lo;
        return grid;
    }
    const double span = hi - lo;
    const double steps = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = lo + span * (static_cast<double>(i) / steps);
    grid.back() = hi;
    return grid;
}

PhaseSweep phase_sweep(double a_e, const WaveguideSpec& guide, std::span<const double> deflections,
                       const FrequencyBand& band, std::size_t n_freq, const QuadratureSpec& quad) {
    validate(band);
    if (deflections.empty()) throw InvalidArgument("phase_sweep: no deflections given");
    if (!std::is_sorted(deflections.begin(), deflections.end()))
        throw InvalidArgument("phase_sweep: deflections must be sorted ascending");
    if (deflections.front() < 0.0) throw InvalidArgument("invariant violated: b_e >= 0");

    PhaseSweep sweep;
    sweep.frequencies = uniform_grid(band.f_low, band.f_high, n_freq);
    sweep.deflections.assign(deflections.begin(), deflections.end());
    sweep.phase_shift_deg.assign(deflections.size(), std::vector<double>(n_freq, 0.0));

    const std::size_t cells = deflections.size() * n_freq;
    parallel_for(cells, [&](std::size_t k) {
        const std::size_t i = k / n_freq;
        const std::size_t j = k % n_freq;
        const double b_e = deflections[i];
        const double f = sweep.frequencies[j];
        sweep.phase_shift_deg[i][j] =
            annotated(b_e, f, [&] { return phase_shift(b_e, a_e, guide, f, quad); });
    });
    return sweep;
}

double dispersion_metric(std::span<const double> row) {
    if (row.empty()) throw InvalidArgument("dispersion_metric: empty row");
    const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    double sum = 0.0;
    for (double v : row) sum += v;
    const double mean = sum / static_cast<double>(row.size());
    if (mean == 0.0) throw InvalidArgument("dispersion_metric: row has zero mean");
    if (*hi == *lo) return 0.0;
    return (*hi - *lo) / mean;
}

}  // namespace gapwave
