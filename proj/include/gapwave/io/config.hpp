#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>

#include "gapwave/actuation.hpp"
#include "gapwave/physics.hpp"
#include "gapwave/quadrature.hpp"

namespace gapwave::io {

/// Everything a CLI run needs. All lengths SI internally.
struct ToolConfig {
    WaveguideSpec guide;
    double a_e = 0.0;
    ScrewSpec screw;
    QuadratureSpec quadrature;
    std::size_t n_sections = 512;
    std::filesystem::path output_dir = ".";
};

/// Parses a JSON configuration document:
///
///   {
///     "guide": { "broad_wall_width_mm": 3.76,
///                "band_ghz": { "f_low": 64, "f_high": 75 } },
///     "a_e_mm": 11,
///     "screw": { "pitch_mm": 0.35, "max_turns": 4.0 },            // optional
///     "quadrature": { "method": "adaptive-simpson",               // optional
///                     "abs_tolerance_rad": 1e-6, "max_subdivisions": 20 },
///     "n_sections": 512,                                          // optional
///     "output_dir": "."                                           // optional
///   }
///
/// Defaults: pitch 0.35 mm, max_turns = cutoff-limited deflection at f_low over
/// pitch, adaptive Simpson at 1e-6 rad with 20 levels, 512 sections. Unknown
/// keys are rejected. Throws ParseError for malformed JSON and ConfigError for
/// schema or invariant violations.
ToolConfig parse_config(std::string_view text);

ToolConfig load_config(const std::filesystem::path& path);

/// WR15 guide (3.76 mm), 64-75 GHz, a_e = 11 mm, with the defaults above.
ToolConfig default_config();

/// Re-checks every component invariant; throws ConfigError naming it.
void validate(const ToolConfig& config);

}  // namespace gapwave::io
