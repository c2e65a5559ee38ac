#include "gapwave/io/config.hpp"

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gapwave/design.hpp"
#include "gapwave/error.hpp"
#include "gapwave/units.hpp"

namespace gapwave::io {

namespace {

using json = nlohmann::json;
using Kind = ConfigError::Kind;

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(Kind::schema, path, "expected an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || item.key() == k;
        if (!known) throw ConfigError(Kind::schema, path + "/" + item.key(), "unknown key");
    }
}

const json& required(const json& obj, const std::string& path, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(Kind::schema, path + "/" + key, "missing required key");
    return *it;
}

double number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(Kind::schema, path, "expected a number");
    return v.get<double>();
}

std::size_t count(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(Kind::schema, path, "expected a non-negative integer");
    return v.get<std::size_t>();
}

// Runs a component validator, re-raising its message against a key path.
template <class Fn>
void check(const std::string& path, Fn&& fn) {
    try {
        fn();
    } catch (const InvalidArgument& e) {
        throw ConfigError(Kind::invariant, path, e.what());
    }
}

}  // namespace

ToolConfig default_config() {
    ToolConfig c;
    c.guide = {mm(3.76), {ghz(64.0), ghz(75.0)}};
    c.a_e = mm(11.0);
    c.screw = default_screw(c.guide);
    return c;
}

void validate(const ToolConfig& config) {
    check("/guide", [&] { validate(config.guide); });
    check("/a_e_mm", [&] {
        if (!(config.a_e > 0.0)) throw InvalidArgument("invariant violated: a_e > 0");
    });
    check("/screw", [&] { validate(config.screw); });
    check("/quadrature", [&] { validate(config.quadrature); });
    if (config.n_sections < 1)
        throw ConfigError(Kind::invariant, "/n_sections", "invariant violated: n_sections >= 1");
}

ToolConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    only_keys(doc, "", {"guide", "a_e_mm", "screw", "quadrature", "n_sections", "output_dir"});

    ToolConfig c;
    const json& guide = required(doc, "", "guide");
    only_keys(guide, "/guide", {"broad_wall_width_mm", "band_ghz"});
    c.guide.broad_wall_width =
        mm(number(required(guide, "/guide", "broad_wall_width_mm"), "/guide/broad_wall_width_mm"));
    const json& band = required(guide, "/guide", "band_ghz");
    only_keys(band, "/guide/band_ghz", {"f_low", "f_high"});
    c.guide.band.f_low = ghz(number(required(band, "/guide/band_ghz", "f_low"), "/guide/band_ghz/f_low"));
    c.guide.band.f_high =
        ghz(number(required(band, "/guide/band_ghz", "f_high"), "/guide/band_ghz/f_high"));
    if (!(c.guide.band.f_low < c.guide.band.f_high))
        throw ConfigError(Kind::schema, "/guide/band_ghz", "f_low must be below f_high");

    c.a_e = mm(number(required(doc, "", "a_e_mm"), "/a_e_mm"));
    if (!(c.a_e > 0.0)) throw ConfigError(Kind::invariant, "/a_e_mm", "invariant violated: a_e > 0");
    check("/guide", [&] { validate(c.guide); });

    double pitch = 0.35e-3;
    std::optional<double> max_turns;
    if (const auto it = doc.find("screw"); it != doc.end()) {
        only_keys(*it, "/screw", {"pitch_mm", "max_turns"});
        if (const auto p = it->find("pitch_mm"); p != it->end()) pitch = mm(number(*p, "/screw/pitch_mm"));
        if (const auto t = it->find("max_turns"); t != it->end())
            max_turns = number(*t, "/screw/max_turns");
    }
    if (!(pitch > 0.0)) throw ConfigError(Kind::invariant, "/screw/pitch_mm", "invariant violated: pitch > 0");
    c.screw = max_turns ? ScrewSpec{pitch, *max_turns} : default_screw(c.guide, pitch);

    if (const auto it = doc.find("quadrature"); it != doc.end()) {
        only_keys(*it, "/quadrature", {"method", "abs_tolerance_rad", "max_subdivisions"});
        if (const auto m = it->find("method"); m != it->end()) {
            if (!m->is_string()) throw ConfigError(Kind::schema, "/quadrature/method", "expected a string");
            try {
                c.quadrature.method = parse_method(m->get<std::string>());
            } catch (const InvalidArgument& e) {
                throw ConfigError(Kind::schema, "/quadrature/method", e.what());
            }
        }
        if (const auto t = it->find("abs_tolerance_rad"); t != it->end())
            c.quadrature.abs_tolerance = number(*t, "/quadrature/abs_tolerance_rad");
        if (const auto s = it->find("max_subdivisions"); s != it->end())
            c.quadrature.max_subdivisions = static_cast<int>(count(*s, "/quadrature/max_subdivisions"));
    }

    if (const auto it = doc.find("n_sections"); it != doc.end()) c.n_sections = count(*it, "/n_sections");

    if (const auto it = doc.find("output_dir"); it != doc.end()) {
        if (!it->is_string()) throw ConfigError(Kind::schema, "/output_dir", "expected a string");
        c.output_dir = it->get<std::string>();
    }

    validate(c);
    return c;
}

ToolConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace gapwave::io
