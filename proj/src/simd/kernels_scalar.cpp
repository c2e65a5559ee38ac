#include <cmath>

#include "gapwave/simd/kernels.hpp"
#include "gapwave/units.hpp"

namespace gapwave::simd::detail {

namespace {

inline double beta_of(double width, double lambda0, double k0) {
    const double ratio = lambda0 / (2.0 * width);
    return k0 * std::sqrt(1.0 - ratio * ratio);
}

void guided_beta_scalar(const double* widths, std::size_t n, double f, double* out) {
    const double lambda0 = kSpeedOfLight / f;
    const double k0 = (2.0 * kPi) / lambda0;
    for (std::size_t i = 0; i < n; ++i) out[i] = beta_of(widths[i], lambda0, k0);
}

void strip_integrand_scalar(const double* cos_theta, std::size_t n, double b_e, double width,
                            double f, double* out) {
    const double lambda0 = kSpeedOfLight / f;
    const double k0 = (2.0 * kPi) / lambda0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = cos_theta[i];
        out[i] = beta_of(width - b_e * c, lambda0, k0) * c;
    }
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
    static constexpr KernelTable table{guided_beta_scalar, strip_integrand_scalar};
    return table;
}

}  // namespace gapwave::simd::detail
