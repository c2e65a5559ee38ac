#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>

namespace gapwave {

struct QuadratureSpec {
    enum class Method { adaptive_simpson, fixed_gauss };

    Method method = Method::adaptive_simpson;
    double abs_tolerance = 1e-6;  // absolute, in the integral's units
    int max_subdivisions = 20;    // refinement levels
};

void validate(const QuadratureSpec& spec);

std::string_view method_name(QuadratureSpec::Method m) noexcept;
/// Parses "adaptive-simpson" / "fixed-gauss"; throws InvalidArgument otherwise.
QuadratureSpec::Method parse_method(std::string_view text);

/// Integrand evaluated on a batch of abscissae: y[i] = f(x[i]).
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> y)>;

struct QuadratureResult {
    double value = 0.0;
    int levels = 0;               // refinement levels actually used
    std::size_t evaluations = 0;  // integrand samples
};

/// Breadth-first adaptive Simpson. Each level's new midpoints are evaluated in
/// one batch. From level 4 on, a panel is accepted when
/// |S(left)+S(right) - S(whole)| <= 15 tol, with the panel tolerance halved per level; accepted panels contribute the
/// Richardson-corrected estimate. Throws ConvergenceError if panels remain
/// after max_subdivisions levels.
QuadratureResult adaptive_simpson(const BatchIntegrand& f, double a, double b,
                                  double abs_tolerance, int max_levels);

/// Composite 8-point Gauss-Legendre with the panel count doubled per level
/// until two successive estimates differ by at most abs_tolerance.
QuadratureResult gauss_legendre(const BatchIntegrand& f, double a, double b,
                                double abs_tolerance, int max_levels);

/// Dispatches on spec.method after validating spec.
QuadratureResult integrate(const BatchIntegrand& f, double a, double b,
                           const QuadratureSpec& spec);

}  // namespace gapwave
