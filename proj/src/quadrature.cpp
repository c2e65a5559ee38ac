#include "gapwave/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "gapwave/error.hpp"

namespace gapwave {

namespace {

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

struct Panel {
    double a, b;
    double fa, fm, fb;
    double whole;
    double tol;
};

constexpr std::array<double, 4> kGaussNodes{
    0.1834346424956498049394761, 0.5255324099163289858177390,
    0.7966664774136267395915539, 0.9602898564975362316835609};
constexpr std::array<double, 4> kGaussWeights{
    0.3626837833783619829651504, 0.3137066458778872873379622,
    0.2223810344533744705443560, 0.1012285362903762591525314};

constexpr std::size_t kGaussChunkPanels = 1024;

// Panels are not accepted above this level: a 3- and 5-point estimate over a
// wide panel can agree by accident.
constexpr int kSimpsonMinLevel = 4;

void check_finite(double v) {
    if (!std::isfinite(v)) throw ConvergenceError("quadrature: integrand returned a non-finite value");
}

void check_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw InvalidArgument("quadrature: interval must be finite with a < b");
}

}  // namespace

void validate(const QuadratureSpec& spec) {
    if (!(spec.abs_tolerance > 0.0)) throw InvalidArgument("invariant violated: abs_tolerance > 0");
    if (spec.max_subdivisions < 8) throw InvalidArgument("invariant violated: max_subdivisions >= 8");
}

std::string_view method_name(QuadratureSpec::Method m) noexcept {
    switch (m) {
        case QuadratureSpec::Method::adaptive_simpson: return "adaptive-simpson";
        case QuadratureSpec::Method::fixed_gauss: return "fixed-gauss";
    }
    return "unknown";
}

QuadratureSpec::Method parse_method(std::string_view text) {
    if (text == "adaptive-simpson") return QuadratureSpec::Method::adaptive_simpson;
    if (text == "fixed-gauss") return QuadratureSpec::Method::fixed_gauss;
    throw InvalidArgument("unknown quadrature method '" + std::string(text) +
                          "' (expected adaptive-simpson or fixed-gauss)");
}

QuadratureResult adaptive_simpson(const BatchIntegrand& f, double a, double b,
                                  double abs_tolerance, int max_levels) {
    check_interval(a, b);
    QuadratureResult result;

    std::array<double, 3> x0{a, 0.5 * (a + b), b};
    std::array<double, 3> y0{};
    f(x0, y0);
    for (double v : y0) check_finite(v);
    result.evaluations = 3;

    std::vector<Panel> active{
        {a, b, y0[0], y0[1], y0[2], (b - a) / 6.0 * (y0[0] + 4.0 * y0[1] + y0[2]), abs_tolerance}};
    std::vector<Panel> next;
    std::vector<double> xs;
    std::vector<double> ys;
    CompensatedSum total;

    for (int level = 1; !active.empty(); ++level) {
        if (level > max_levels)
            throw ConvergenceError("adaptive Simpson did not reach tolerance " +
                                   std::to_string(abs_tolerance) + " within " +
                                   std::to_string(max_levels) + " levels");
        xs.resize(2 * active.size());
        ys.resize(xs.size());
        for (std::size_t i = 0; i < active.size(); ++i) {
            const Panel& p = active[i];
            const double m = 0.5 * (p.a + p.b);
            xs[2 * i] = 0.5 * (p.a + m);
            xs[2 * i + 1] = 0.5 * (m + p.b);
        }
        f(xs, ys);
        result.evaluations += xs.size();
        result.levels = level;

        next.clear();
        for (std::size_t i = 0; i < active.size(); ++i) {
            const Panel& p = active[i];
            const double flm = ys[2 * i];
            const double frm = ys[2 * i + 1];
            check_finite(flm);
            check_finite(frm);
            const double m = 0.5 * (p.a + p.b);
            const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
            const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
            const double delta = left + right - p.whole;
            if (level >= kSimpsonMinLevel && std::abs(delta) <= 15.0 * p.tol) {
                total.add(left + right + delta / 15.0);
            } else {
                next.push_back({p.a, m, p.fa, flm, p.fm, left, 0.5 * p.tol});
                next.push_back({m, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol});
            }
        }
        active.swap(next);
    }
    result.value = total.value();
    return result;
}

QuadratureResult gauss_legendre(const BatchIntegrand& f, double a, double b,
                                double abs_tolerance, int max_levels) {
    check_interval(a, b);
    QuadratureResult result;
    std::vector<double> xs;
    std::vector<double> ys;
    double previous = 0.0;

    for (int level = 0; level <= max_levels; ++level) {
        const std::size_t panels = std::size_t{1} << level;
        const double h = (b - a) / static_cast<double>(panels);
        CompensatedSum total;
        for (std::size_t first = 0; first < panels; first += kGaussChunkPanels) {
            const std::size_t count = std::min(kGaussChunkPanels, panels - first);
            xs.resize(count * 8);
            ys.resize(xs.size());
            for (std::size_t p = 0; p < count; ++p) {
                const double lo = a + h * static_cast<double>(first + p);
                const double mid = lo + 0.5 * h;
                for (std::size_t k = 0; k < 4; ++k) {
                    xs[p * 8 + 2 * k] = mid - 0.5 * h * kGaussNodes[k];
                    xs[p * 8 + 2 * k + 1] = mid + 0.5 * h * kGaussNodes[k];
                }
            }
            f(xs, ys);
            for (std::size_t p = 0; p < count; ++p) {
                double panel = 0.0;
                for (std::size_t k = 0; k < 4; ++k) {
                    const double lo_v = ys[p * 8 + 2 * k];
                    const double hi_v = ys[p * 8 + 2 * k + 1];
                    check_finite(lo_v);
                    check_finite(hi_v);
                    panel += kGaussWeights[k] * (lo_v + hi_v);
                }
                total.add(0.5 * h * panel);
            }
        }
        result.evaluations += panels * 8;
        result.levels = level;
        const double estimate = total.value();
        if (level > 0 && std::abs(estimate - previous) <= abs_tolerance) {
            result.value = estimate;
            return result;
        }
        previous = estimate;
    }
    throw ConvergenceError("Gauss-Legendre did not reach tolerance " + std::to_string(abs_tolerance) +
                           " within " + std::to_string(max_levels) + " panel doublings");
}

QuadratureResult integrate(const BatchIntegrand& f, double a, double b,
                           const QuadratureSpec& spec) {
    validate(spec);
    switch (spec.method) {
        case QuadratureSpec::Method::adaptive_simpson:
            return adaptive_simpson(f, a, b, spec.abs_tolerance, spec.max_subdivisions);
        case QuadratureSpec::Method::fixed_gauss:
            return gauss_legendre(f, a, b, spec.abs_tolerance, spec.max_subdivisions);
    }
    throw InvalidArgument("unknown quadrature method");
}

}  // namespace gapwave
