#pragma once

#include <cstddef>
#include <optional>

#include "gapwave/physics.hpp"
#include "gapwave/quadrature.hpp"

namespace gapwave {

struct DesignTargets {
    FrequencyBand band;
    double min_max_phase_deg = 0.0;
    double max_length = 0.0;      // m, bound on 2 a_e
    double cutoff_margin = 0.0;   // fraction above the narrowed cutoff at band.f_low
    std::optional<double> max_dispersion;
};

void validate(const DesignTargets& targets);

struct DesignResult {
    double a_e = 0.0;               // m
    double b_e_max = 0.0;           // m
    double achieved_phase_deg = 0.0;  // at band centre
    double dispersion = 0.0;        // +inf when the full-deflection band sweep hits cutoff
    bool feasible = false;
};

struct SearchOptions {
    std::size_t grid_points = 64;      // a_e samples over (0, max_length/2]
    std::size_t dispersion_points = 12;
    double refine_tolerance = 1e-6;    // m
};

/// Largest apex deflection keeping the narrowest section at least
/// (1 + margin) above cutoff at f_low: w - (1 + margin) lambda0/2, clamped at 0.
double feasible_max_deflection(const WaveguideSpec& guide, double f_low, double cutoff_margin);

/// phase_shift at feasible_max_deflection(guide, f_low, margin), degrees.
double max_achievable_phase(double a_e, const WaveguideSpec& guide, double f, double f_low,
                            double cutoff_margin, const QuadratureSpec& quad = {});

/// Smallest a_e whose full-deflection phase at the band centre reaches the
/// target (and whose dispersion meets the optional bound). Grid search, then
/// golden-section refinement between the last failing and first passing grid
/// points. Infeasibility is returned, not thrown: feasible = false with the
/// largest-a_e candidate reported.
DesignResult search_design(const DesignTargets& targets, const WaveguideSpec& guide,
                           const QuadratureSpec& quad = {}, const SearchOptions& options = {});

}  // namespace gapwave
