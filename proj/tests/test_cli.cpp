#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gapwave/cli.hpp"
#include "gapwave/io/touchstone.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Outcome r;
    r.code = gapwave::cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("gapwave_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, PhaseAtZeroDeflection) {
    const Outcome r = run({"phase", "--be", "0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("phase shift: 0.000°"), std::string::npos) << r.out;
}

TEST(Cli, PhaseValue) {
    const Outcome r = run({"phase", "--be", "0.55", "--freq", "70"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "phase shift: 106.814° at 70.000 GHz (b_e = 0.550 mm, a_e = 11.000 mm)\n");
}

TEST(Cli, GlobalApertureOverride) {
    const Outcome r = run({"--ae", "5.5", "phase", "--be", "0.55", "--freq", "70"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("53.407°"), std::string::npos) << r.out;
}

TEST(Cli, CalibrationTable) {
    const Outcome r = run({"calibrate", "--freq", "69.5", "--npoints", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header;
    std::string first;
    std::getline(lines, header);
    std::getline(lines, first);
    EXPECT_EQ(header, "turns,be_mm,phase_deg");
    EXPECT_EQ(first, "0,0,0");
}

TEST(Cli, InfeasibleDesignIsNotAnError) {
    const Outcome r = run({"design", "--min-phase", "720", "--max-length", "10", "--band", "64:76",
                       "--margin", "0"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["feasible"], false);
    EXPECT_NEAR(j["achieved_phase_deg"].get<double>(), 225.64, 2.0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"phase"}).code, 2);
    EXPECT_EQ(run({"phase", "--be", "0.5", "--bogus"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"phase", "--be", "abc"}).code, 2);
    EXPECT_EQ(run({"phase", "--be", "0.5", "--band", "64-75"}).code, 2);

    const Outcome evanescent = run({"phase", "--be", "2"});
    EXPECT_EQ(evanescent.code, 1);
    EXPECT_NE(evanescent.err.find("evanescent"), std::string::npos) << evanescent.err;
    EXPECT_EQ(run({"calibrate", "--npoints", "1"}).code, 2);
    EXPECT_EQ(run({"--config", "/nonexistent/gapwave.json", "phase", "--be", "0.5"}).code, 2);
    EXPECT_EQ(run({"--ae", "-1", "phase", "--be", "0.5"}).code, 1);

    const fs::path dir = scratch_dir("bad_config");
    std::ofstream(dir / "bad.json") << R"({"guide": {"broad_wall_width_mm": 3.76}, "a_e_mm": 11})";
    const Outcome bad = run({"--config", (dir / "bad.json").string(), "phase", "--be", "0.5"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("config schema error"), std::string::npos) << bad.err;
}

TEST(Cli, OutputIsByteStable) {
    const std::vector<std::string> args{"sweep", "--be", "0.25,0.55", "--nfreq", "7"};
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 15);
}

TEST(Cli, SparamsToFileAndConfig) {
    const fs::path dir = scratch_dir("sparams");
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"guide": {"broad_wall_width_mm": 3.76, "band_ghz": {"f_low": 64, "f_high": 75}},
                  "a_e_mm": 11, "n_sections": 64, "output_dir": ")"
            << dir.string() << "\"}";
    }
    const Outcome r = run({"--config", (dir / "cfg.json").string(), "sparams", "--be", "0.55", "--nfreq",
                       "11", "--out", "taper.s2p"});
    EXPECT_EQ(r.code, 0) << r.err;
    ASSERT_TRUE(fs::exists(dir / "taper.s2p"));
    std::istringstream in(slurp(dir / "taper.s2p"));
    EXPECT_EQ(gapwave::io::read_touchstone(in).size(), 11u);
}

TEST(Cli, CompareAgainstOwnModel) {
    const fs::path dir = scratch_dir("compare");
    const Outcome sweep = run({"sweep", "--be", "0.55", "--nfreq", "12", "--out", (dir / "m.csv").string()});
    ASSERT_EQ(sweep.code, 0) << sweep.err;
    // Reduce the long-format sweep to freq,value and shift it by 5 degrees.
    std::istringstream rows(slurp(dir / "m.csv"));
    std::ofstream measured(dir / "meas.csv");
    measured.precision(15);
    std::string line;
    std::getline(rows, line);
    measured << "freq_ghz,phase_deg\n";
    while (std::getline(rows, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.rfind(',');
        measured << line.substr(0, c1) << ',' << std::stod(line.substr(c2 + 1)) + 5.0 << '\n';
    }
    measured.close();
    const Outcome r = run({"compare", "--measured", (dir / "meas.csv").string(), "--kind", "phase",
                       "--be", "0.55"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["compared"], 12);
    EXPECT_NEAR(j["mean_error"].get<double>(), 5.0, 1e-6);
}
