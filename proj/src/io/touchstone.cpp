#include "gapwave/io/touchstone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "gapwave/error.hpp"
#include "gapwave/io/csv.hpp"
#include "gapwave/units.hpp"

namespace gapwave::io {

namespace {

void write_complex(std::ostream& out, complex v) {
    out << ' ' << format_number(v.real(), kTouchstoneDigits) << ' '
        << format_number(v.imag(), kTouchstoneDigits);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

}  // namespace

void write_touchstone(std::ostream& out, std::span<const SParamPoint> sweep) {
    if (sweep.empty()) throw InvalidArgument("write_touchstone: empty sweep");
    for (std::size_t i = 1; i < sweep.size(); ++i)
        if (!(sweep[i].frequency > sweep[i - 1].frequency))
            throw InvalidArgument("write_touchstone: frequencies must be strictly ascending");

    out << "! gapwave two-port S-parameters\n";
    out << "! normalized to the TE10 wave impedance of the port waveguide (reference declared as 1)\n";
    out << "# GHz S RI R 1\n";
    for (const SParamPoint& p : sweep) {
        out << format_number(to_ghz(p.frequency), kTouchstoneDigits);
        write_complex(out, p.s.s11);
        write_complex(out, p.s.s21);
        write_complex(out, p.s.s12);
        write_complex(out, p.s.s22);
        out << '\n';
    }
}

void write_touchstone(const std::filesystem::path& path, std::span<const SParamPoint> sweep) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    write_touchstone(out, sweep);
    if (!out) throw Error("write failed for " + path.string());
}

std::vector<SParamPoint> read_touchstone(std::istream& in) {
    double freq_scale = 1e9;
    std::string format = "MA";
    bool have_options = false;
    std::vector<double> values;
    std::vector<std::size_t> value_lines;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (const auto bang = line.find('!'); bang != std::string::npos) line.erase(bang);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') {
            if (have_options) throw ParseError("line " + std::to_string(line_no) + ": second option line");
            have_options = true;
            std::string rest = first.substr(1);
            std::string tok;
            std::vector<std::string> toks;
            if (!rest.empty()) toks.push_back(upper(rest));
            while (ls >> tok) toks.push_back(upper(tok));
            for (std::size_t k = 0; k < toks.size(); ++k) {
                const std::string& t = toks[k];
                if (t == "HZ") freq_scale = 1.0;
                else if (t == "KHZ") freq_scale = 1e3;
                else if (t == "MHZ") freq_scale = 1e6;
                else if (t == "GHZ") freq_scale = 1e9;
                else if (t == "RI" || t == "MA" || t == "DB") format = t;
                else if (t == "S") continue;
                else if (t == "R") ++k;
                else throw ParseError("line " + std::to_string(line_no) + ": unsupported option '" + t + "'");
            }
            continue;
        }
        std::istringstream all(line);
        std::string tok;
        while (all >> tok) {
            try {
                std::size_t used = 0;
                values.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad number '" + tok + "'");
            }
            value_lines.push_back(line_no);
        }
    }
    if (values.size() % 9 != 0)
        throw ParseError("line " + std::to_string(value_lines.empty() ? line_no : value_lines.back()) +
                         ": two-port data must come in groups of 9 numbers");

    auto pair = [&](double a, double b) -> complex {
        if (format == "RI") return {a, b};
        const double mag = format == "DB" ? std::pow(10.0, a / 20.0) : a;
        return std::polar(mag, to_radians(b));
    };
    std::vector<SParamPoint> out;
    for (std::size_t i = 0; i < values.size(); i += 9) {
        SParamPoint p;
        p.frequency = values[i] * freq_scale;
        p.s.s11 = pair(values[i + 1], values[i + 2]);
        p.s.s21 = pair(values[i + 3], values[i + 4]);
        p.s.s12 = pair(values[i + 5], values[i + 6]);
        p.s.s22 = pair(values[i + 7], values[i + 8]);
        out.push_back(p);
    }
    return out;
}

}  // namespace gapwave::io
