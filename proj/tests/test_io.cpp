#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gapwave/actuation.hpp"
#include "gapwave/error.hpp"
#include "gapwave/io/compare.hpp"
#include "gapwave/io/config.hpp"
#include "gapwave/io/csv.hpp"
#include "gapwave/io/report.hpp"
#include "gapwave/io/touchstone.hpp"
#include "gapwave/phase_model.hpp"
#include "gapwave/tmm.hpp"
#include "gapwave/units.hpp"

using namespace gapwave;
using namespace gapwave::io;

namespace {

const char* kMinimalConfig = R"({
  "guide": {"broad_wall_width_mm": 3.76, "band_ghz": {"f_low": 64, "f_high": 75}},
  "a_e_mm": 11
})";

ConfigError config_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "no ConfigError for " << text;
    return ConfigError(ConfigError::Kind::schema, "", "");
}

nlohmann::json minimal() { return nlohmann::json::parse(kMinimalConfig); }

Trace make_trace(TraceKind kind, std::vector<double> f_ghz, std::vector<double> v) {
    Trace t;
    t.kind = kind;
    for (double f : f_ghz) t.frequencies.push_back(ghz(f));
    t.values = std::move(v);
    return t;
}

}  // namespace

TEST(Config, MinimalDocumentGetsDefaults) {
    const ToolConfig c = parse_config(kMinimalConfig);
    EXPECT_EQ(c.guide.broad_wall_width, mm(3.76));
    EXPECT_EQ(c.guide.band.f_low, ghz(64.0));
    EXPECT_EQ(c.guide.band.f_high, ghz(75.0));
    EXPECT_EQ(c.a_e, mm(11.0));
    EXPECT_EQ(c.screw.pitch, 0.35e-3);
    EXPECT_NEAR(c.screw.max_turns * c.screw.pitch, 1.417871421875e-3, 1e-12);
    EXPECT_EQ(c.quadrature.method, QuadratureSpec::Method::adaptive_simpson);
    EXPECT_EQ(c.quadrature.abs_tolerance, 1e-6);
    EXPECT_EQ(c.quadrature.max_subdivisions, 20);
    EXPECT_EQ(c.n_sections, 512u);
    EXPECT_EQ(c.output_dir, ".");

    const ToolConfig d = default_config();
    EXPECT_EQ(d.guide.broad_wall_width, c.guide.broad_wall_width);
    EXPECT_EQ(d.a_e, c.a_e);
    EXPECT_EQ(d.screw.max_turns, c.screw.max_turns);
}

TEST(Config, FullDocument) {
    auto j = minimal();
    j["screw"] = {{"pitch_mm", 0.25}, {"max_turns", 5}};
    j["quadrature"] = {{"method", "fixed-gauss"}, {"abs_tolerance_rad", 1e-8}, {"max_subdivisions", 12}};
    j["n_sections"] = 256;
    j["output_dir"] = "out";
    const ToolConfig c = parse_config(j.dump());
    EXPECT_EQ(c.screw.pitch, 0.25e-3);
    EXPECT_EQ(c.screw.max_turns, 5.0);
    EXPECT_EQ(c.quadrature.method, QuadratureSpec::Method::fixed_gauss);
    EXPECT_EQ(c.quadrature.abs_tolerance, 1e-8);
    EXPECT_EQ(c.quadrature.max_subdivisions, 12);
    EXPECT_EQ(c.n_sections, 256u);
    EXPECT_EQ(c.output_dir, "out");
}

TEST(Config, InvertedBandIsSchemaError) {
    auto j = minimal();
    j["guide"]["band_ghz"] = {{"f_low", 75}, {"f_high", 64}};
    const ConfigError e = config_error(j.dump());
    EXPECT_EQ(e.kind(), ConfigError::Kind::schema);
    EXPECT_NE(e.path().find("band_ghz"), std::string::npos);
}

TEST(Config, NonPositiveAeIsInvariantError) {
    auto j = minimal();
    j["a_e_mm"] = 0;
    const ConfigError e = config_error(j.dump());
    EXPECT_EQ(e.kind(), ConfigError::Kind::invariant);
    EXPECT_NE(std::string(e.what()).find("a_e > 0"), std::string::npos);
}

TEST(Config, SchemaViolations) {
    auto unknown = minimal();
    unknown["extra"] = 1;
    EXPECT_EQ(config_error(unknown.dump()).kind(), ConfigError::Kind::schema);

    auto missing = minimal();
    missing.erase("a_e_mm");
    EXPECT_EQ(config_error(missing.dump()).kind(), ConfigError::Kind::schema);

    auto wrong_type = minimal();
    wrong_type["a_e_mm"] = "eleven";
    EXPECT_EQ(config_error(wrong_type.dump()).kind(), ConfigError::Kind::schema);

    auto method = minimal();
    method["quadrature"] = {{"method", "romberg"}};
    EXPECT_THROW(parse_config(method.dump()), ConfigError);

    auto subdivisions = minimal();
    subdivisions["quadrature"] = {{"max_subdivisions", 4}};
    EXPECT_THROW(parse_config(subdivisions.dump()), ConfigError);
}

TEST(Config, MalformedJsonIsParseError) {
    EXPECT_THROW(parse_config("{\"guide\": "), ParseError);
    EXPECT_THROW(load_config("/nonexistent/gapwave.json"), Error);
}

TEST(Csv, FormatNumber) {
    EXPECT_EQ(format_number(-0.0, kCsvDigits), "0");
    EXPECT_EQ(format_number(70.0, kCsvDigits), "70");
    EXPECT_EQ(format_number(0.1, kCsvDigits), "0.1");
    EXPECT_EQ(format_number(106.814196638679887, kCsvDigits), "106.814196639");
}

TEST(Csv, PhaseSweepRoundTrip) {
    const WaveguideSpec guide{mm(3.76), {ghz(64.0), ghz(75.0)}};
    const std::vector<double> defl{mm(0.25), mm(0.55)};
    const PhaseSweep sweep = phase_sweep(mm(11.0), guide, defl, guide.band, 23);
    std::stringstream ss;
    write_phase_sweep_csv(ss, sweep);
    std::string header;
    std::getline(ss, header);
    EXPECT_EQ(header, "freq_ghz,be_mm,phase_deg");
    ss.seekg(0);
    const auto rows = read_numeric_csv(ss, 3);
    ASSERT_EQ(rows.size(), 46u);
    for (std::size_t d = 0; d < 2; ++d) {
        for (std::size_t i = 0; i < 23; ++i) {
            const auto& r = rows[d * 23 + i];
            EXPECT_NEAR(r[0], to_ghz(sweep.frequencies[i]), 1e-9);
            EXPECT_NEAR(r[1], to_mm(sweep.deflections[d]), 1e-9);
            EXPECT_NEAR(r[2], sweep.phase_shift_deg[d][i], 1e-9);
        }
    }
}

TEST(Csv, CalibrationHeader) {
    const WaveguideSpec guide{mm(3.76), {ghz(64.0), ghz(75.0)}};
    const auto table = calibration_table(ghz(69.5), mm(11.0), guide, default_screw(guide), 3);
    std::ostringstream out;
    write_calibration_csv(out, table);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "turns,be_mm,phase_deg");
    EXPECT_NE(out.str().find("\n0,0,0\n"), std::string::npos);
}

TEST(Csv, ReaderSkipsCommentsAndReportsLine) {
    std::istringstream ok("# digitized\nfreq,value\n\n64,1.5\n65,2.5\n");
    const auto rows = read_numeric_csv(ok, 2);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1][1], 2.5);

    std::istringstream bad("freq,value\n64,1\n65,x\n");
    try {
        read_numeric_csv(bad, 2);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    std::istringstream short_row("64,1\n65\n");
    EXPECT_THROW(read_numeric_csv(short_row, 2), ParseError);
}

TEST(Touchstone, RoundTrip) {
    const WaveguideSpec guide{mm(3.76), {ghz(64.0), ghz(75.0)}};
    const auto pts = sweep_sparams({mm(11.0), mm(0.55)}, guide, guide.band, 221, 128);
    std::stringstream ss;
    write_touchstone(ss, pts);
    const std::string text = ss.str();
    EXPECT_EQ(text.rfind('!', 0), 0u);
    EXPECT_NE(text.find("\n# GHz S RI R 1\n"), std::string::npos);
    const auto back = read_touchstone(ss);
    ASSERT_EQ(back.size(), 221u);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_NEAR(back[i].frequency, pts[i].frequency, 1e-8 * pts[i].frequency);
        EXPECT_LT(std::abs(back[i].s.s11 - pts[i].s.s11), 1e-8);
        EXPECT_LT(std::abs(back[i].s.s21 - pts[i].s.s21), 1e-8);
        EXPECT_LT(std::abs(back[i].s.s12 - pts[i].s.s12), 1e-8);
        EXPECT_LT(std::abs(back[i].s.s22 - pts[i].s.s22), 1e-8);
    }
}

TEST(Touchstone, ReadsOtherFormats) {
    std::istringstream ma("! test\n# MHz S MA R 50\n70000 0.1 90 1 -45 1 -45 0.1 90\n");
    const auto p = read_touchstone(ma);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_NEAR(p[0].frequency, ghz(70.0), 1e-3);
    EXPECT_NEAR(p[0].s.s11.imag(), 0.1, 1e-12);
    EXPECT_NEAR(std::arg(p[0].s.s21), -kPi / 4.0, 1e-12);

    std::istringstream db("# GHz S DB R 1\n70 -20 0 0 0 0 0 -20 0\n");
    const auto q = read_touchstone(db);
    EXPECT_NEAR(std::abs(q[0].s.s11), 0.1, 1e-12);

    std::istringstream bad("# GHz S RI R 1\n70 1 2 3\n");
    EXPECT_THROW(read_touchstone(bad), ParseError);
}

TEST(Touchstone, RejectsBadSweeps) {
    std::ostringstream out;
    EXPECT_THROW(write_touchstone(out, std::vector<SParamPoint>{}), InvalidArgument);
    std::vector<SParamPoint> unsorted(2);
    unsorted[0].frequency = ghz(70.0);
    unsorted[1].frequency = ghz(69.0);
    EXPECT_THROW(write_touchstone(out, unsorted), InvalidArgument);
}

TEST(Compare, IdenticalTraceHasZeroError) {
    const Trace t = make_trace(TraceKind::phase, {64, 66, 68, 70}, {10, 20, 30, 40});
    const ComparisonReport r = compare_measured(t, t);
    EXPECT_EQ(r.compared, 4u);
    EXPECT_EQ(r.skipped, 0u);
    EXPECT_EQ(r.mean_error, 0.0);
    EXPECT_EQ(r.rms_error, 0.0);
    EXPECT_EQ(r.max_abs_error, 0.0);
}

TEST(Compare, OffsetAndInterpolation) {
    const Trace model = make_trace(TraceKind::phase, {64, 66, 68, 70}, {10, 20, 30, 40});
    const Trace measured = make_trace(TraceKind::phase, {63, 65, 67, 69, 71}, {0, 20, 30, 40, 0});
    const ComparisonReport r = compare_measured(model, measured);
    EXPECT_EQ(r.compared, 3u);
    EXPECT_EQ(r.skipped, 2u);
    EXPECT_NEAR(r.mean_error, 5.0, 1e-12);
    EXPECT_NEAR(r.rms_error, 5.0, 1e-12);
    EXPECT_NEAR(r.max_abs_error, 5.0, 1e-12);
    ASSERT_EQ(r.residuals.size(), 3u);
    EXPECT_NEAR(r.residuals[0].model, 15.0, 1e-12);
    EXPECT_NEAR(r.residuals[0].error, 5.0, 1e-12);
}

TEST(Compare, Errors) {
    const Trace phase = make_trace(TraceKind::phase, {64, 66}, {1, 2});
    const Trace s21 = make_trace(TraceKind::s21_db, {64, 66}, {1, 2});
    EXPECT_THROW(compare_measured(phase, s21), InvalidArgument);
    const Trace far = make_trace(TraceKind::phase, {80, 81}, {1, 2});
    EXPECT_THROW(compare_measured(phase, far), InvalidArgument);
    const Trace unsorted = make_trace(TraceKind::phase, {66, 64}, {1, 2});
    EXPECT_THROW(validate(unsorted), InvalidArgument);
    EXPECT_THROW(parse_kind("group_delay"), InvalidArgument);
    EXPECT_EQ(parse_kind(kind_name(TraceKind::s11_db)), TraceKind::s11_db);
}

TEST(Compare, MeasuredCsv) {
    std::istringstream in("freq_ghz,phase_deg\n64,10\n70,40\n");
    const Trace t = read_measured_csv(in, TraceKind::phase);
    ASSERT_EQ(t.frequencies.size(), 2u);
    EXPECT_EQ(t.frequencies[1], ghz(70.0));
    std::istringstream bad("64,10\n63,40\n");
    EXPECT_THROW(read_measured_csv(bad, TraceKind::phase), Error);
}

TEST(Compare, ModelTraces) {
    const WaveguideSpec guide{mm(3.76), {ghz(64.0), ghz(75.0)}};
    const std::vector<double> defl{mm(0.55)};
    const PhaseSweep sweep = phase_sweep(mm(11.0), guide, defl, guide.band, 5);
    const Trace p = model_trace(sweep, 0);
    EXPECT_EQ(p.values, sweep.phase_shift_deg[0]);
    EXPECT_THROW(model_trace(sweep, 1), InvalidArgument);
    const auto pts = sweep_sparams({mm(11.0), 0.0}, guide, guide.band, 5, 32);
    const Trace s21 = model_trace(pts, TraceKind::s21_db);
    for (double v : s21.values) EXPECT_NEAR(v, 0.0, 1e-10);
    EXPECT_THROW(model_trace(pts, TraceKind::phase), InvalidArgument);
}

TEST(Report, DesignJson) {
    DesignTargets t;
    t.band = {ghz(64.0), ghz(76.0)};
    t.min_max_phase_deg = 720.0;
    t.max_length = mm(10.0);
    DesignResult r;
    r.a_e = mm(5.0);
    r.b_e_max = mm(1.4);
    r.achieved_phase_deg = 225.6;
    r.dispersion = std::numeric_limits<double>::infinity();
    r.feasible = false;
    const std::string text = design_report_json(r, t);
    EXPECT_EQ(text.back(), '\n');
    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["feasible"], false);
    EXPECT_NEAR(j["a_e_mm"].get<double>(), 5.0, 1e-12);
    EXPECT_NEAR(j["length_mm"].get<double>(), 10.0, 1e-12);
    EXPECT_TRUE(j["dispersion"].is_null());
    EXPECT_NEAR(j["evaluated_at_ghz"].get<double>(), 70.0, 1e-12);
    EXPECT_EQ(text, design_report_json(r, t));
    EXPECT_EQ(text.find("\"feasible\""), text.find('"'));
}

TEST(Report, ComparisonJson) {
    const Trace t = make_trace(TraceKind::s11_db, {64, 66}, {-30, -25});
    const auto j = nlohmann::json::parse(comparison_report_json(compare_measured(t, t)));
    EXPECT_EQ(j["kind"], "s11_db");
    EXPECT_EQ(j["compared"], 2);
    EXPECT_EQ(j["rms_error"], 0.0);
}
