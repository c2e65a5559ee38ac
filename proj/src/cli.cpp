#include "gapwave/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gapwave/actuation.hpp"
#include "gapwave/design.hpp"
#include "gapwave/error.hpp"
#include "gapwave/io/compare.hpp"
#include "gapwave/io/config.hpp"
#include "gapwave/io/csv.hpp"
#include "gapwave/io/report.hpp"
#include "gapwave/io/touchstone.hpp"
#include "gapwave/phase_model.hpp"
#include "gapwave/tmm.hpp"
#include "gapwave/units.hpp"

namespace gapwave::cli {

namespace {

struct BandArg {
    double low_ghz = 0.0;
    double high_ghz = 0.0;
};

std::optional<BandArg> parse_band(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo = text.substr(0, colon);
        const std::string hi = text.substr(colon + 1);
        BandArg b{std::stod(lo, &used_lo), std::stod(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size()) return std::nullopt;
        return b;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string fixed3(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Options {
    std::string config_path;
    std::optional<double> ae_mm;
    std::vector<double> be_mm;
    std::optional<double> freq_ghz;
    std::string band;
    std::size_t nfreq = 0;
    std::optional<std::size_t> nsections;
    std::string out_path;
    std::size_t npoints = 11;
    double min_phase = 0.0;
    double max_length_mm = 0.0;
    double margin = 0.0;
    std::optional<double> max_dispersion;
    std::string measured_path;
    std::string kind = "phase";
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
        config_ = opt.config_path.empty() ? io::default_config() : io::load_config(opt.config_path);
        if (opt.ae_mm) {
            config_.a_e = mm(*opt.ae_mm);
            if (!(config_.a_e > 0.0)) throw InvalidArgument("invariant violated: a_e > 0");
        }
        if (!opt.band.empty()) {
            const auto b = parse_band(opt.band);
            config_.guide.band = {ghz(b->low_ghz), ghz(b->high_ghz)};
            validate(config_.guide);
        }
        if (opt.nsections) config_.n_sections = *opt.nsections;
        io::validate(config_);
    }

    void phase() {
        const double f = frequency();
        const double b_e = single_deflection();
        const double deg = phase_shift(b_e, config_.a_e, config_.guide, f, config_.quadrature);
        emit([&](std::ostream& os) {
            os << "phase shift: " << fixed3(deg) << "° at " << fixed3(to_ghz(f)) << " GHz (b_e = "
               << fixed3(to_mm(b_e)) << " mm, a_e = " << fixed3(to_mm(config_.a_e)) << " mm)\n";
        });
    }

    void sweep() {
        std::vector<double> deflections;
        for (double v : opt_.be_mm) deflections.push_back(mm(v));
        std::sort(deflections.begin(), deflections.end());
        const PhaseSweep s = phase_sweep(config_.a_e, config_.guide, deflections, config_.guide.band,
                                         opt_.nfreq, config_.quadrature);
        emit([&](std::ostream& os) { io::write_phase_sweep_csv(os, s); });
    }

    void sparams() {
        const auto points = sweep_sparams({config_.a_e, single_deflection()}, config_.guide,
                                          config_.guide.band, opt_.nfreq, config_.n_sections);
        emit([&](std::ostream& os) { io::write_touchstone(os, points); });
    }

    void calibrate() {
        const auto table = calibration_table(frequency(), config_.a_e, config_.guide, config_.screw,
                                             opt_.npoints, config_.quadrature);
        emit([&](std::ostream& os) { io::write_calibration_csv(os, table); });
    }

    void design() {
        DesignTargets targets;
        targets.band = config_.guide.band;
        targets.min_max_phase_deg = opt_.min_phase;
        targets.max_length = mm(opt_.max_length_mm);
        targets.cutoff_margin = opt_.margin;
        targets.max_dispersion = opt_.max_dispersion;
        const DesignResult r = search_design(targets, config_.guide, config_.quadrature);
        emit([&](std::ostream& os) { os << io::design_report_json(r, targets); });
    }

    void compare() {
        const io::TraceKind kind = io::parse_kind(opt_.kind);
        std::ifstream in(opt_.measured_path);
        if (!in) throw Error("cannot open measured trace " + opt_.measured_path);
        const io::Trace measured = io::read_measured_csv(in, kind);
        const double b_e = single_deflection();
        io::Trace model;
        if (kind == io::TraceKind::phase) {
            const double deflection[] = {b_e};
            model = io::model_trace(phase_sweep(config_.a_e, config_.guide, deflection,
                                                config_.guide.band, opt_.nfreq, config_.quadrature),
                                    0);
        } else {
            model = io::model_trace(sweep_sparams({config_.a_e, b_e}, config_.guide, config_.guide.band,
                                                  opt_.nfreq, config_.n_sections),
                                    kind);
        }
        const io::ComparisonReport report = io::compare_measured(model, measured);
        emit([&](std::ostream& os) { os << io::comparison_report_json(report); });
    }

private:
    double frequency() const {
        return opt_.freq_ghz ? ghz(*opt_.freq_ghz) : config_.guide.band.center();
    }

    double single_deflection() const {
        if (opt_.be_mm.size() != 1) throw InvalidArgument("expected exactly one --be value");
        if (!(opt_.be_mm.front() >= 0.0)) throw InvalidArgument("invariant violated: b_e >= 0");
        return mm(opt_.be_mm.front());
    }

    void emit(const std::function<void(std::ostream&)>& write) {
        if (opt_.out_path.empty()) {
            write(out_);
            return;
        }
        std::filesystem::path path(opt_.out_path);
        if (path.is_relative()) path = config_.output_dir / path;
        std::ofstream file(path);
        if (!file) throw Error("cannot open " + path.string() + " for writing");
        write(file);
        if (!file) throw Error("write failed for " + path.string());
    }

    const Options& opt_;
    std::ostream& out_;
    io::ToolConfig config_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Design and analysis of strip-tuned waveguide phase shifters", "gapwave"};
    app.require_subcommand(1);
    app.add_option("--config", opt.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--ae", opt.ae_mm, "Semi-major axis a_e in mm (overrides config)");

    const CLI::Validator band_check(
        [](std::string& s) { return parse_band(s) ? std::string{} : "expected <GHz:GHz>, got '" + s + "'"; },
        "GHz:GHz");

    auto add_band = [&](CLI::App* sub) {
        sub->add_option("--band", opt.band, "Frequency band <GHz:GHz> (overrides config)")->check(band_check);
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "Output file (default stdout)"); };

    auto* phase = app.add_subcommand("phase", "Single phase-shift evaluation");
    phase->add_option("--be", opt.be_mm, "Deflection b_e in mm")->required()->expected(1);
    phase->add_option("--freq", opt.freq_ghz, "Frequency in GHz (default band centre)");
    add_band(phase);
    add_out(phase);

    auto* sweep = app.add_subcommand("sweep", "Phase-shift table over the band -> CSV");
    sweep->add_option("--be", opt.be_mm, "Deflections in mm (comma separated)")->required()->delimiter(',');
    sweep->add_option("--nfreq", opt.nfreq, "Frequency points")->default_val(23)->check(CLI::PositiveNumber);
    add_band(sweep);
    add_out(sweep);

    auto* sparams = app.add_subcommand("sparams", "Staircase S-parameters -> Touchstone");
    sparams->add_option("--be", opt.be_mm, "Deflection b_e in mm")->required()->expected(1);
    sparams->add_option("--nfreq", opt.nfreq, "Frequency points")->default_val(221)->check(CLI::PositiveNumber);
    sparams->add_option("--nsections", opt.nsections, "Staircase sections")->check(CLI::PositiveNumber);
    add_band(sparams);
    add_out(sparams);

    auto* calibrate = app.add_subcommand("calibrate", "Screw calibration table -> CSV");
    calibrate->add_option("--freq", opt.freq_ghz, "Frequency in GHz (default band centre)");
    calibrate->add_option("--npoints", opt.npoints, "Table rows")->default_val(11)->check(CLI::Range(2, 100000));
    add_band(calibrate);
    add_out(calibrate);

    auto* design = app.add_subcommand("design", "Search the smallest design meeting targets -> JSON");
    design->add_option("--min-phase", opt.min_phase, "Required phase shift at band centre, degrees")
        ->required()
        ->check(CLI::NonNegativeNumber);
    design->add_option("--max-length", opt.max_length_mm, "Bound on 2 a_e in mm")
        ->required()
        ->check(CLI::PositiveNumber);
    design->add_option("--margin", opt.margin, "Cutoff margin fraction")->default_val(0.0)->check(CLI::NonNegativeNumber);
    design->add_option("--max-dispersion", opt.max_dispersion, "Optional dispersion bound");
    add_band(design);
    add_out(design);

    auto* compare = app.add_subcommand("compare", "Model vs measured CSV -> JSON report");
    compare->add_option("--measured", opt.measured_path, "CSV of freq_ghz,value")->required()->check(CLI::ExistingFile);
    compare->add_option("--kind", opt.kind, "phase, s11_db or s21_db")
        ->default_val("phase")
        ->check(CLI::IsMember({"phase", "s11_db", "s21_db"}));
    compare->add_option("--be", opt.be_mm, "Deflection b_e in mm")->required()->expected(1);
    compare->add_option("--nfreq", opt.nfreq, "Model frequency points")->default_val(221)->check(CLI::PositiveNumber);
    compare->add_option("--nsections", opt.nsections, "Staircase sections")->check(CLI::PositiveNumber);
    add_band(compare);
    add_out(compare);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        Runner run(opt, out);
        if (*phase) run.phase();
        else if (*sweep) run.sweep();
        else if (*sparams) run.sparams();
        else if (*calibrate) run.calibrate();
        else if (*design) run.design();
        else if (*compare) run.compare();
    } catch (const gapwave::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace gapwave::cli
