// SPDX-License-Identifier: Apache-2.0
#include "disp/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace disp::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(DISPBOX_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect() {
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend> g_forced{Backend::Auto};

Backend resolve() {
    Backend f = g_forced.load(std::memory_order_relaxed);
    if (f != Backend::Auto) return f;
    static const Backend detected = detect();
    return detected;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

Backend active_backend() {
    return resolve();
}

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Auto:
        case Backend::Scalar: return true;
        case Backend::Avx2: return cpu_has_avx2();
    }
    return false;
}

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw std::invalid_argument(std::string("kernel backend not supported here: ")
                                    + backend_name(b));
    g_forced.store(b, std::memory_order_relaxed);
}

bool any_point_in_open_box(std::span<const std::span<const double>> cols,
                           std::span<const double> lo,
                           std::span<const double> hi) {
#ifdef DISPBOX_HAVE_AVX2
    if (resolve() == Backend::Avx2) return any_point_in_open_box_avx2(cols, lo, hi);
#endif
    return any_point_in_open_box_scalar(cols, lo, hi);
}

GapResult max_adjacent_gap(std::span<const double> xs) {
#ifdef DISPBOX_HAVE_AVX2
    if (resolve() == Backend::Avx2) return max_adjacent_gap_avx2(xs);
#endif
    return max_adjacent_gap_scalar(xs);
}

}  // namespace disp::kernels
