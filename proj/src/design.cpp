#include "gapwave/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gapwave/error.hpp"
#include "gapwave/parallel.hpp"
#include "gapwave/phase_model.hpp"
#include "gapwave/units.hpp"

namespace gapwave {

namespace {

constexpr double kInvGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

struct Candidate {
    double a_e = 0.0;
    double phase = 0.0;
    double dispersion = 0.0;
};

double full_deflection_dispersion(double a_e, double b_e_max, const WaveguideSpec& guide,
                                  const DesignTargets& targets, const QuadratureSpec& quad,
                                  std::size_t points) {
    if (b_e_max == 0.0) return 0.0;
    try {
        const double deflection[] = {b_e_max};
        const PhaseSweep sweep = phase_sweep(a_e, guide, deflection, targets.band, points, quad);
        return dispersion_metric(sweep.phase_shift_deg.front());
    } catch (const EvanescentError&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

void validate(const DesignTargets& targets) {
    validate(targets.band);
    if (!(targets.min_max_phase_deg >= 0.0))
        throw InvalidArgument("invariant violated: min_max_phase >= 0");
    if (!(targets.max_length > 0.0)) throw InvalidArgument("invariant violated: max_length > 0");
    if (!(targets.cutoff_margin >= 0.0))
        throw InvalidArgument("invariant violated: cutoff_margin >= 0");
    if (targets.max_dispersion && !(*targets.max_dispersion >= 0.0))
        throw InvalidArgument("invariant violated: max_dispersion >= 0");
}

double feasible_max_deflection(const WaveguideSpec& guide, double f_low, double cutoff_margin) {
    const double half_wavelength = kSpeedOfLight / f_low / 2.0;
    return std::max(0.0, guide.broad_wall_width - (1.0 + cutoff_margin) * half_wavelength);
}

double max_achievable_phase(double a_e, const WaveguideSpec& guide, double f, double f_low,
                            double cutoff_margin, const QuadratureSpec& quad) {
    return phase_shift(feasible_max_deflection(guide, f_low, cutoff_margin), a_e, guide, f, quad);
}

DesignResult search_design(const DesignTargets& targets, const WaveguideSpec& guide,
                           const QuadratureSpec& quad, const SearchOptions& options) {
    validate(targets);
    if (options.grid_points < 64) throw InvalidArgument("search_design: grid_points must be >= 64");

    WaveguideSpec host = guide;
    host.band = targets.band;
    const double b_e_max = feasible_max_deflection(host, targets.band.f_low, targets.cutoff_margin);
    const double f_center = targets.band.center();
    const double a_max = 0.5 * targets.max_length;
    const std::size_t n = options.grid_points;

    // Dispersion of the full-deflection row does not depend on a_e (the
    // phase scales linearly with it), so one sweep serves the whole grid.
    const double dispersion =
        full_deflection_dispersion(a_max, b_e_max, host, targets, quad, options.dispersion_points);
    const bool dispersion_ok = !targets.max_dispersion || dispersion <= *targets.max_dispersion;

    std::vector<Candidate> grid(n);
    parallel_for(n, [&](std::size_t k) {
        const double a_e = a_max * static_cast<double>(k + 1) / static_cast<double>(n);
        grid[k] = {a_e, phase_shift(b_e_max, a_e, host, f_center, quad), dispersion};
    });

    auto meets = [&](double phase) { return dispersion_ok && phase >= targets.min_max_phase_deg; };

    const auto first = std::find_if(grid.begin(), grid.end(),
                                    [&](const Candidate& c) { return meets(c.phase); });
    DesignResult result;
    result.b_e_max = b_e_max;
    result.dispersion = dispersion;
    if (first == grid.end()) {
        result.a_e = grid.back().a_e;
        result.achieved_phase_deg = grid.back().phase;
        result.feasible = false;
        return result;
    }

    Candidate best = *first;
    if (first != grid.begin()) {
        // Golden-section on |phase(a_e) - target|, unimodal because phase is
        // monotone in a_e. The upper end of the final bracket is feasible.
        const double target = targets.min_max_phase_deg;
        auto miss = [&](double a_e) {
            return std::abs(phase_shift(b_e_max, a_e, host, f_center, quad) - target);
        };
        double lo = std::prev(first)->a_e;
        double hi = first->a_e;
        double x1 = hi - kInvGolden * (hi - lo);
        double x2 = lo + kInvGolden * (hi - lo);
        double f1 = miss(x1);
        double f2 = miss(x2);
        while (hi - lo > options.refine_tolerance) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvGolden * (hi - lo);
                f1 = miss(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvGolden * (hi - lo);
                f2 = miss(x2);
            }
        }
        const double refined_phase = phase_shift(b_e_max, hi, host, f_center, quad);
        if (meets(refined_phase)) best = {hi, refined_phase, dispersion};
    }

    result.a_e = best.a_e;
    result.achieved_phase_deg = best.phase;
    result.feasible = true;
    return result;
}

}  // namespace gapwave
