#include "gapwave/actuation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapwave/design.hpp"
#include "gapwave/error.hpp"
#include "gapwave/parallel.hpp"
#include "gapwave/phase_model.hpp"
#include "gapwave/units.hpp"

namespace gapwave {

namespace {

constexpr double kPhaseTolerance = 0.01;  // degrees
constexpr int kMaxBisections = 60;

}  // namespace

void validate(const ScrewSpec& screw) {
    if (!(screw.pitch > 0.0)) throw InvalidArgument("invariant violated: pitch > 0");
    if (!(screw.max_turns > 0.0)) throw InvalidArgument("invariant violated: max_turns > 0");
}

ScrewSpec default_screw(const WaveguideSpec& guide, double pitch) {
    ScrewSpec screw{pitch, 0.0};
    screw.max_turns = feasible_max_deflection(guide, guide.band.f_low, 0.0) / pitch;
    return screw;
}

double turns_to_deflection(double turns, const ScrewSpec& screw) {
    validate(screw);
    if (!(turns >= 0.0) || turns > screw.max_turns)
        throw InvalidArgument("turns " + std::to_string(turns) + " outside [0, " +
                              std::to_string(screw.max_turns) + "]");
    return turns * screw.pitch;
}

double deflection_to_turns(double b_e, const ScrewSpec& screw) {
    validate(screw);
    if (!(b_e >= 0.0)) throw InvalidArgument("invariant violated: b_e >= 0");
    const double turns = b_e / screw.pitch;
    if (turns > screw.max_turns)
        throw InvalidArgument("deflection " + std::to_string(to_mm(b_e)) + " mm needs " +
                              std::to_string(turns) + " turns, beyond max_turns " +
                              std::to_string(screw.max_turns));
    return turns;
}

double max_usable_deflection(double f, const WaveguideSpec& guide, const ScrewSpec& screw) {
    validate(guide);
    validate(screw);
    double upper = feasible_max_deflection(guide, guide.band.f_low, 0.0);
    upper = std::min(upper, screw.max_turns * screw.pitch);
    // Narrowest width that still propagates at f, less a hair so the apex is
    // strictly above cutoff.
    const double at_f = guide.broad_wall_width - kSpeedOfLight / (2.0 * f);
    upper = std::min(upper, std::nextafter(at_f, 0.0));
    while (upper > 0.0 && !propagates(guide.broad_wall_width - upper, f))
        upper = std::nextafter(upper, 0.0);
    return std::max(upper, 0.0);
}

Setting solve_setting(double target_phase_deg, double f, double a_e, const WaveguideSpec& guide,
                      const ScrewSpec& screw, const QuadratureSpec& quad, SolveStats* stats) {
    if (!(target_phase_deg >= 0.0)) throw InvalidArgument("invariant violated: target_phase >= 0");
    const double upper = max_usable_deflection(f, guide, screw);
    auto phase = [&](double b_e) { return phase_shift(b_e, a_e, guide, f, quad); };

    Setting s{0.0, 0.0, 0.0, f};
    if (target_phase_deg == 0.0) {
        phase(0.0);
        if (stats) stats->iterations = 0;
        return s;
    }

    const double reachable = phase(upper);
    if (target_phase_deg > reachable)
        throw InfeasibleError("target phase " + std::to_string(target_phase_deg) +
                                  " deg exceeds the achievable maximum " +
                                  std::to_string(reachable) + " deg at b_e = " +
                                  std::to_string(to_mm(upper)) + " mm",
                              reachable);

    double lo = 0.0;
    double hi = upper;
    double mid = hi;
    double value = reachable;
    int it = 0;
    while (std::abs(value - target_phase_deg) > kPhaseTolerance && it < kMaxBisections) {
        mid = 0.5 * (lo + hi);
        value = phase(mid);
        if (value < target_phase_deg)
            lo = mid;
        else
            hi = mid;
        ++it;
    }
    if (stats) stats->iterations = it;
    s.b_e = mid;
    s.turns = mid / screw.pitch;
    s.phase_shift_deg = value;
    return s;
}

std::vector<Setting> calibration_table(double f, double a_e, const WaveguideSpec& guide,
                                       const ScrewSpec& screw, std::size_t n_points,
                                       const QuadratureSpec& quad) {
    if (n_points < 2) throw InvalidArgument("calibration_table: n_points must be >= 2");
    const double max_turns = max_usable_deflection(f, guide, screw) / screw.pitch;
    const std::vector<double> turns = uniform_grid(0.0, max_turns, n_points);
    std::vector<Setting> table(n_points);
    parallel_for(n_points, [&](std::size_t i) {
        const double b_e = turns[i] * screw.pitch;
        table[i] = {turns[i], b_e, phase_shift(b_e, a_e, guide, f, quad), f};
    });
    return table;
}

double mean_phase_per_turn(std::span<const Setting> table) {
    if (table.empty() || !(table.back().turns > 0.0))
        throw InvalidArgument("mean_phase_per_turn: table spans no screw travel");
    return (table.back().phase_shift_deg - table.front().phase_shift_deg) /
           (table.back().turns - table.front().turns);
}

}  // namespace gapwave
