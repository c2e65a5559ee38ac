#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "gapwave/error.hpp"
#include "gapwave/simd/kernels.hpp"

namespace gapwave::simd {

namespace {

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("GAPWAVE_SIMD")) {
        if (std::string_view(env) == "scalar") return Backend::scalar;
    }
    return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& active() noexcept {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

const detail::KernelTable& table() noexcept {
#if defined(GAPWAVE_BUILD_AVX2)
    if (active().load(std::memory_order_relaxed) == Backend::avx2) return detail::avx2_kernels();
#endif
    return detail::scalar_kernels();
}

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out) throw InvalidArgument("simd kernel: input and output spans differ in size");
}

}  // namespace

std::string_view name(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool available(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2:
#if defined(GAPWAVE_BUILD_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!available(b))
        throw InvalidArgument("simd backend '" + std::string(name(b)) + "' is not available");
    active().store(b, std::memory_order_relaxed);
}

ScopedBackend::ScopedBackend(Backend b) : previous_(active_backend()) { set_backend(b); }
ScopedBackend::~ScopedBackend() { active().store(previous_, std::memory_order_relaxed); }

void guided_beta(std::span<const double> widths, double f, std::span<double> out) {
    check_sizes(widths.size(), out.size());
    table().guided_beta(widths.data(), widths.size(), f, out.data());
}

void strip_integrand(std::span<const double> cos_theta, double b_e, double width, double f,
                     std::span<double> out) {
    check_sizes(cos_theta.size(), out.size());
    table().strip_integrand(cos_theta.data(), cos_theta.size(), b_e, width, f, out.data());
}

}  // namespace gapwave::simd
