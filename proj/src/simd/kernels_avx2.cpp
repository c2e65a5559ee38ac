#include <immintrin.h>

#include <cmath>

#include "gapwave/simd/kernels.hpp"
#include "gapwave/units.hpp"

namespace gapwave::simd::detail {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d beta_of(__m256d width, __m256d lambda0, __m256d k0) {
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d ratio = _mm256_div_pd(lambda0, _mm256_mul_pd(two, width));
    const __m256d radicand = _mm256_sub_pd(one, _mm256_mul_pd(ratio, ratio));
    return _mm256_mul_pd(k0, _mm256_sqrt_pd(radicand));
}

inline double beta_tail(double width, double lambda0, double k0) {
    const double ratio = lambda0 / (2.0 * width);
    return k0 * std::sqrt(1.0 - ratio * ratio);
}

void guided_beta_avx2(const double* widths, std::size_t n, double f, double* out) {
    const double lambda0 = kSpeedOfLight / f;
    const double k0 = (2.0 * kPi) / lambda0;
    const __m256d vl = _mm256_set1_pd(lambda0);
    const __m256d vk = _mm256_set1_pd(k0);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        _mm256_storeu_pd(out + i, beta_of(_mm256_loadu_pd(widths + i), vl, vk));
    }
    for (; i < n; ++i) out[i] = beta_tail(widths[i], lambda0, k0);
}

void strip_integrand_avx2(const double* cos_theta, std::size_t n, double b_e, double width,
                          double f, double* out) {
    const double lambda0 = kSpeedOfLight / f;
    const double k0 = (2.0 * kPi) / lambda0;
    const __m256d vl = _mm256_set1_pd(lambda0);
    const __m256d vk = _mm256_set1_pd(k0);
    const __m256d vb = _mm256_set1_pd(b_e);
    const __m256d vw = _mm256_set1_pd(width);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d c = _mm256_loadu_pd(cos_theta + i);
        const __m256d w = _mm256_sub_pd(vw, _mm256_mul_pd(vb, c));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(beta_of(w, vl, vk), c));
    }
    for (; i < n; ++i) {
        const double c = cos_theta[i];
        out[i] = beta_tail(width - b_e * c, lambda0, k0) * c;
    }
}

}  // namespace

const KernelTable& avx2_kernels() noexcept {
    static constexpr KernelTable table{guided_beta_avx2, strip_integrand_avx2};
    return table;
}

}  // namespace gapwave::simd::detail
