#include "gapwave/io/compare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gapwave/error.hpp"
#include "gapwave/io/csv.hpp"
#include "gapwave/units.hpp"

namespace gapwave::io {

std::string_view kind_name(TraceKind k) noexcept {
    switch (k) {
        case TraceKind::phase: return "phase";
        case TraceKind::s11_db: return "s11_db";
        case TraceKind::s21_db: return "s21_db";
    }
    return "unknown";
}

TraceKind parse_kind(std::string_view text) {
    if (text == "phase") return TraceKind::phase;
    if (text == "s11_db") return TraceKind::s11_db;
    if (text == "s21_db") return TraceKind::s21_db;
    throw InvalidArgument("unknown trace kind '" + std::string(text) + "' (expected phase, s11_db or s21_db)");
}

void validate(const Trace& trace) {
    if (trace.frequencies.size() != trace.values.size())
        throw InvalidArgument("trace: frequency and value counts differ");
    if (trace.frequencies.empty()) throw InvalidArgument("trace: no points");
    for (std::size_t i = 0; i < trace.values.size(); ++i) {
        if (!std::isfinite(trace.values[i]) || !std::isfinite(trace.frequencies[i]))
            throw InvalidArgument("trace: non-finite value at point " + std::to_string(i));
        if (i > 0 && !(trace.frequencies[i] > trace.frequencies[i - 1]))
            throw InvalidArgument("trace: frequencies must be strictly increasing (point " +
                                  std::to_string(i) + ")");
    }
}

Trace read_measured_csv(std::istream& in, TraceKind kind) {
    Trace t;
    t.kind = kind;
    for (const auto& row : read_numeric_csv(in, 2)) {
        t.frequencies.push_back(ghz(row[0]));
        t.values.push_back(row[1]);
    }
    validate(t);
    return t;
}

Trace model_trace(const PhaseSweep& sweep, std::size_t row) {
    if (row >= sweep.phase_shift_deg.size()) throw InvalidArgument("model_trace: row out of range");
    return {TraceKind::phase, sweep.frequencies, sweep.phase_shift_deg[row]};
}

Trace model_trace(std::span<const SParamPoint> sweep, TraceKind kind) {
    if (kind == TraceKind::phase)
        throw InvalidArgument("model_trace: phase traces come from a phase sweep");
    Trace t;
    t.kind = kind;
    for (const SParamPoint& p : sweep) {
        t.frequencies.push_back(p.frequency);
        t.values.push_back(magnitude_db(kind == TraceKind::s11_db ? p.s.s11 : p.s.s21));
    }
    return t;
}

ComparisonReport compare_measured(const Trace& model, const Trace& measured) {
    if (model.kind != measured.kind)
        throw InvalidArgument("compare: model trace is " + std::string(kind_name(model.kind)) +
                              " but measured trace is " + std::string(kind_name(measured.kind)));
    validate(model);
    validate(measured);

    const double lo = model.frequencies.front();
    const double hi = model.frequencies.back();
    ComparisonReport report;
    report.kind = measured.kind;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < measured.frequencies.size(); ++i) {
        const double f = measured.frequencies[i];
        if (f < lo || f > hi) {
            ++report.skipped;
            continue;
        }
        const auto upper = std::lower_bound(model.frequencies.begin(), model.frequencies.end(), f);
        const std::size_t k = static_cast<std::size_t>(upper - model.frequencies.begin());
        double value;
        if (model.frequencies[k] == f) {
            value = model.values[k];
        } else {
            const double f0 = model.frequencies[k - 1];
            const double f1 = model.frequencies[k];
            const double t = (f - f0) / (f1 - f0);
            value = model.values[k - 1] + t * (model.values[k] - model.values[k - 1]);
        }
        const double err = measured.values[i] - value;
        report.residuals.push_back({f, measured.values[i], value, err});
        sum += err;
        sum_sq += err * err;
        report.max_abs_error = std::max(report.max_abs_error, std::abs(err));
    }
    if (report.residuals.empty())
        throw InvalidArgument("compare: measured frequencies do not overlap the model range");
    report.compared = report.residuals.size();
    const double n = static_cast<double>(report.compared);
    report.mean_error = sum / n;
    report.rms_error = std::sqrt(sum_sq / n);
    return report;
}

}  // namespace gapwave::io
