#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gapwave/actuation.hpp"
#include "gapwave/phase_model.hpp"

namespace gapwave::io {

/// Significant digits used for every CSV number.
inline constexpr int kCsvDigits = 12;

/// printf "%.*g"; negative zero is written as 0.
std::string format_number(double v, int significant_digits);

/// Long format, one row per (deflection, frequency), deflection-major:
/// freq_ghz,be_mm,phase_deg
void write_phase_sweep_csv(std::ostream& out, const PhaseSweep& sweep);

/// turns,be_mm,phase_deg
void write_calibration_csv(std::ostream& out, std::span<const Setting> table);

/// Reads comma-separated numeric rows with exactly `columns` fields. A first
/// line that does not parse as numbers is taken as a header. Blank lines and
/// lines starting with '#' are skipped. Throws ParseError naming the 1-based
/// line number.
std::vector<std::vector<double>> read_numeric_csv(std::istream& in, std::size_t columns);

}  // namespace gapwave::io
