#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gapwave {

/// Base of every domain failure raised by the toolkit. The CLI maps these to
/// exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition or type invariant was violated by the caller.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Geometry that closes the guide (strip deflection >= broad-wall width).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// A cross-section is at or below its TE10 cutoff.
class EvanescentError : public Error {
public:
    EvanescentError(const std::string& what, double width_m, double freq_hz,
                    std::optional<std::size_t> section = std::nullopt)
        : Error(what), width_m_(width_m), freq_hz_(freq_hz), section_(section) {}

    double width() const noexcept { return width_m_; }
    double frequency() const noexcept { return freq_hz_; }
    std::optional<std::size_t> section() const noexcept { return section_; }

private:
    double width_m_;
    double freq_hz_;
    std::optional<std::size_t> section_;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A phase target beyond what the geometry can reach. Carries the reachable
/// maximum in degrees.
class InfeasibleError : public Error {
public:
    InfeasibleError(const std::string& what, double achievable_deg)
        : Error(what), achievable_deg_(achievable_deg) {}
    double achievable_degrees() const noexcept { return achievable_deg_; }

private:
    double achievable_deg_;
};

/// Malformed input text (config, CSV, Touchstone).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Configuration document rejected. `path` is the JSON pointer of the
/// offending key.
class ConfigError : public Error {
public:
    enum class Kind { schema, invariant };

    ConfigError(Kind kind, std::string path, const std::string& message)
        : Error((kind == Kind::schema ? "config schema error at " : "config invariant violation at ") +
                (path.empty() ? std::string("/") : path) + ": " + message),
          kind_(kind),
          path_(std::move(path)) {}

    Kind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }

private:
    Kind kind_;
    std::string path_;
};

}  // namespace gapwave
