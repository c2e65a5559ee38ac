#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "gapwave/phase_model.hpp"
#include "gapwave/tmm.hpp"

namespace gapwave::io {

enum class TraceKind { phase, s11_db, s21_db };

std::string_view kind_name(TraceKind k) noexcept;
/// "phase", "s11_db" or "s21_db"; throws InvalidArgument otherwise.
TraceKind parse_kind(std::string_view text);

/// Frequency-indexed values: degrees for phase, dB otherwise. Used for both the
/// model side and user-digitized measurements.
struct Trace {
    TraceKind kind = TraceKind::phase;
    std::vector<double> frequencies;  // Hz, strictly increasing
    std::vector<double> values;
};

/// Throws InvalidArgument unless sizes match, values are finite and
/// frequencies strictly increase.
void validate(const Trace& trace);

/// Reads `freq_ghz,value` rows (optional header). Throws ParseError naming the
/// offending line.
Trace read_measured_csv(std::istream& in, TraceKind kind);

/// Row `row` of a phase sweep as a phase trace.
Trace model_trace(const PhaseSweep& sweep, std::size_t row);

/// |S11| or |S21| in dB from an S-parameter sweep.
Trace model_trace(std::span<const SParamPoint> sweep, TraceKind kind);

struct Residual {
    double frequency = 0.0;  // Hz
    double measured = 0.0;
    double model = 0.0;
    double error = 0.0;      // measured - model
};

struct ComparisonReport {
    TraceKind kind = TraceKind::phase;
    std::size_t compared = 0;
    std::size_t skipped = 0;  // measured points outside the model's range
    double mean_error = 0.0;
    double rms_error = 0.0;
    double max_abs_error = 0.0;
    std::vector<Residual> residuals;
};

/// Linearly interpolates the model onto the measured frequencies inside its
/// range and summarizes the residuals. Throws InvalidArgument on a kind
/// mismatch or when the ranges do not overlap.
ComparisonReport compare_measured(const Trace& model, const Trace& measured);

}  // namespace gapwave::io
