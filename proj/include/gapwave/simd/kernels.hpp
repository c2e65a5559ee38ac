#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Batch evaluation of the TE10 dispersion over many cross-sections. The scalar
// backend is the reference; vector backends perform the same IEEE operations
// in the same order and must agree bit for bit.
namespace gapwave::simd {

enum class Backend { scalar, avx2 };

std::string_view name(Backend b) noexcept;

/// Compiled in and supported by the running CPU.
bool available(Backend b) noexcept;

/// Backend used by the dispatching entry points below. Defaults to the widest
/// available; GAPWAVE_SIMD=scalar forces the reference path.
Backend active_backend() noexcept;

/// Overrides the active backend. Throws InvalidArgument if unavailable.
void set_backend(Backend b);

/// Restores the previous backend on destruction.
class ScopedBackend {
public:
    explicit ScopedBackend(Backend b);
    ~ScopedBackend();
    ScopedBackend(const ScopedBackend&) = delete;
    ScopedBackend& operator=(const ScopedBackend&) = delete;

private:
    Backend previous_;
};

/// out[i] = TE10 beta of widths[i] at f. Callers guarantee every width
/// propagates; non-propagating inputs produce NaN.
void guided_beta(std::span<const double> widths, double f, std::span<double> out);

/// Strip phase integrand in the angular variable: with h = b_e * cos(theta),
/// out[i] = beta(width - b_e * cos_theta[i], f) * cos_theta[i].
void strip_integrand(std::span<const double> cos_theta, double b_e, double width, double f,
                     std::span<double> out);

namespace detail {

struct KernelTable {
    void (*guided_beta)(const double* widths, std::size_t n, double f, double* out);
    void (*strip_integrand)(const double* cos_theta, std::size_t n, double b_e, double width,
                            double f, double* out);
};

const KernelTable& scalar_kernels() noexcept;
#if defined(GAPWAVE_BUILD_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif

}  // namespace detail
}  // namespace gapwave::simd
