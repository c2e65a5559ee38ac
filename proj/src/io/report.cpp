#include "gapwave/io/report.hpp"

#include <cmath>

#include <json.hpp>

#include "gapwave/units.hpp"

namespace gapwave::io {

namespace {

using ojson = nlohmann::ordered_json;

// JSON has no infinity; unbounded values are written as null.
ojson finite_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

}  // namespace

std::string design_report_json(const DesignResult& result, const DesignTargets& targets) {
    ojson doc;
    doc["feasible"] = result.feasible;
    doc["a_e_mm"] = to_mm(result.a_e);
    doc["length_mm"] = to_mm(2.0 * result.a_e);
    doc["b_e_max_mm"] = to_mm(result.b_e_max);
    doc["achieved_phase_deg"] = result.achieved_phase_deg;
    doc["evaluated_at_ghz"] = to_ghz(targets.band.center());
    doc["dispersion"] = finite_or_null(result.dispersion);
    ojson t;
    t["band_ghz"] = {to_ghz(targets.band.f_low), to_ghz(targets.band.f_high)};
    t["min_max_phase_deg"] = targets.min_max_phase_deg;
    t["max_length_mm"] = to_mm(targets.max_length);
    t["cutoff_margin"] = targets.cutoff_margin;
    t["max_dispersion"] = targets.max_dispersion ? ojson(*targets.max_dispersion) : ojson(nullptr);
    doc["targets"] = t;
    return doc.dump(2) + "\n";
}

std::string comparison_report_json(const ComparisonReport& report) {
    ojson doc;
    doc["kind"] = std::string(kind_name(report.kind));
    doc["compared"] = report.compared;
    doc["skipped"] = report.skipped;
    doc["mean_error"] = report.mean_error;
    doc["rms_error"] = report.rms_error;
    doc["max_abs_error"] = report.max_abs_error;
    ojson rows = ojson::array();
    for (const Residual& r : report.residuals) {
        ojson row;
        row["freq_ghz"] = to_ghz(r.frequency);
        row["measured"] = r.measured;
        row["model"] = r.model;
        row["error"] = r.error;
        rows.push_back(row);
    }
    doc["residuals"] = rows;
    return doc.dump(2) + "\n";
}

}  // namespace gapwave::io
