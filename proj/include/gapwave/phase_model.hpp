#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gapwave/physics.hpp"
#include "gapwave/quadrature.hpp"

namespace gapwave {

/// Differential phase shift over a frequency grid, one row per deflection.
struct PhaseSweep {
    std::vector<double> frequencies;  // Hz, ascending
    std::vector<double> deflections;  // m (b_e), ascending
    std::vector<std::vector<double>> phase_shift_deg;  // [deflection][frequency]
};

/// Accumulated TE10 phase (rad) through the narrowed section [-a_e, a_e].
///
/// The integral of beta(w - h_e(x), f) over x is evaluated in the angular
/// variable x = a_e sin(theta), where h_e = b_e cos(theta) and
/// dx = a_e cos(theta) dtheta. The integrand is then smooth at the strip ends,
/// where the x-space form has an infinite slope. The quadrature tolerance
/// applies to the returned phase.
///
/// Throws GeometryError if b_e closes the guide, EvanescentError if the
/// narrowest section (x = 0) is at or below cutoff, ConvergenceError if the
/// tolerance is not met.
double total_phase(const EllipticalStripProfile& profile, const WaveguideSpec& guide, double f,
                   const QuadratureSpec& quad = {});

/// Phase shift relative to the undeflected strip, in degrees:
/// total_phase(b_e = 0) - total_phase(b_e), non-negative. Evaluated as one
/// integral of the beta difference, to within quad.abs_tolerance (rad) and
/// additionally to 1e-11 relative.
double phase_shift(double b_e, double a_e, const WaveguideSpec& guide, double f,
                   const QuadratureSpec& quad = {});

/// n uniform points over [lo, hi], endpoints included. n == 1 gives {lo}.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// phase_shift over a uniform frequency grid across `band` for each deflection.
/// Deflections must be ascending and non-negative. Failures are rethrown with
/// the offending (b_e, f) in the message.
PhaseSweep phase_sweep(double a_e, const WaveguideSpec& guide, std::span<const double> deflections,
                       const FrequencyBand& band, std::size_t n_freq,
                       const QuadratureSpec& quad = {});

/// (max - min) / mean of a row. Throws InvalidArgument for an empty row or a
/// zero mean.
double dispersion_metric(std::span<const double> row);

}  // namespace gapwave
