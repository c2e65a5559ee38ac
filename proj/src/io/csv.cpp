#include "gapwave/io/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>

#include "gapwave/error.hpp"
#include "gapwave/units.hpp"

namespace gapwave::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view s, double& v) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::string format_number(double v, int significant_digits) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

void write_phase_sweep_csv(std::ostream& out, const PhaseSweep& sweep) {
    out << "freq_ghz,be_mm,phase_deg\n";
    for (std::size_t i = 0; i < sweep.deflections.size(); ++i) {
        for (std::size_t j = 0; j < sweep.frequencies.size(); ++j) {
            out << format_number(to_ghz(sweep.frequencies[j]), kCsvDigits) << ','
                << format_number(to_mm(sweep.deflections[i]), kCsvDigits) << ','
                << format_number(sweep.phase_shift_deg[i][j], kCsvDigits) << '\n';
        }
    }
}

void write_calibration_csv(std::ostream& out, std::span<const Setting> table) {
    out << "turns,be_mm,phase_deg\n";
    for (const Setting& s : table) {
        out << format_number(s.turns, kCsvDigits) << ',' << format_number(to_mm(s.b_e), kCsvDigits)
            << ',' << format_number(s.phase_shift_deg, kCsvDigits) << '\n';
    }
}

std::vector<std::vector<double>> read_numeric_csv(std::istream& in, std::size_t columns) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        const auto fields = split(view);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t k = 0; k < fields.size(); ++k) numeric = numeric && parse_double(fields[k], row[k]);

        if (!seen_content) {
            seen_content = true;
            if (!numeric) {
                if (fields.size() != columns)
                    throw ParseError("line " + std::to_string(line_no) + ": header has " +
                                     std::to_string(fields.size()) + " columns, expected " +
                                     std::to_string(columns));
                continue;
            }
        }
        if (fields.size() != columns)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                             " columns, found " + std::to_string(fields.size()));
        if (!numeric) throw ParseError("line " + std::to_string(line_no) + ": non-numeric field");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gapwave::io
