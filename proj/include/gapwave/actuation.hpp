#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gapwave/physics.hpp"
#include "gapwave/quadrature.hpp"

namespace gapwave {

/// Tuning screw. The strip apex follows the screw tip, so deflection is
/// turns * pitch.
struct ScrewSpec {
    double pitch = 0.35e-3;  // m per turn (M1.6 coarse thread)
    double max_turns = 0.0;
};

void validate(const ScrewSpec& screw);

/// Screw with max_turns set to the cutoff-limited deflection at the band's
/// low edge.
ScrewSpec default_screw(const WaveguideSpec& guide, double pitch = 0.35e-3);

struct Setting {
    double turns = 0.0;
    double b_e = 0.0;              // m
    double phase_shift_deg = 0.0;
    double frequency = 0.0;        // Hz the phase refers to
};

double turns_to_deflection(double turns, const ScrewSpec& screw);
double deflection_to_turns(double b_e, const ScrewSpec& screw);

/// Bisection result of solve_setting.
struct SolveStats {
    int iterations = 0;
};

/// Finds the deflection whose phase shift at f equals the target (within
/// 0.01 degrees) by bisection on [0, upper], where upper is the smallest of the
/// cutoff-limited deflection at the band's low edge, the screw travel and the
/// largest deflection still propagating at f. Throws InfeasibleError carrying
/// the phase at `upper` when the target is beyond it.
Setting solve_setting(double target_phase_deg, double f, double a_e, const WaveguideSpec& guide,
                      const ScrewSpec& screw, const QuadratureSpec& quad = {},
                      SolveStats* stats = nullptr);

/// Uniform grid of n_points screw positions from 0 to the maximum usable
/// turns, with the phase shift at f for each.
std::vector<Setting> calibration_table(double f, double a_e, const WaveguideSpec& guide,
                                       const ScrewSpec& screw, std::size_t n_points,
                                       const QuadratureSpec& quad = {});

/// Secant phase per turn over the whole table (last row / last turns).
double mean_phase_per_turn(std::span<const Setting> table);

/// Usable deflection range at f for this guide and screw.
double max_usable_deflection(double f, const WaveguideSpec& guide, const ScrewSpec& screw);

}  // namespace gapwave
