// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2 only; callers reach it through the runtime dispatcher.
#ifdef DISPBOX_HAVE_AVX2

#include <immintrin.h>

#include <cassert>
#include <limits>

#include "disp/kernels.hpp"

namespace disp::kernels {

bool any_point_in_open_box_avx2(std::span<const std::span<const double>> cols,
                                std::span<const double> lo,
                                std::span<const double> hi) {
    std::size_t n = cols.empty() ? 0 : cols[0].size();
    std::size_t d = cols.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d inside = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
        for (std::size_t k = 0; k < d; ++k) {
            __m256d x = _mm256_loadu_pd(cols[k].data() + i);
            __m256d gt = _mm256_cmp_pd(x, _mm256_set1_pd(lo[k]), _CMP_GT_OQ);
            __m256d lt = _mm256_cmp_pd(x, _mm256_set1_pd(hi[k]), _CMP_LT_OQ);
            inside = _mm256_and_pd(inside, _mm256_and_pd(gt, lt));
            if (_mm256_movemask_pd(inside) == 0) break;
        }
        if (_mm256_movemask_pd(inside) != 0) return true;
    }
    for (; i < n; ++i) {
        bool inside = true;
        for (std::size_t k = 0; k < d; ++k) {
            double x = cols[k][i];
            if (!(x > lo[k] && x < hi[k])) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

GapResult max_adjacent_gap_avx2(std::span<const double> xs) {
    assert(xs.size() >= 2);
    std::size_t gaps = xs.size() - 1;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    if (gaps >= 4) {
        __m256d vbest = _mm256_set1_pd(best);
        for (; i + 4 <= gaps; i += 4) {
            __m256d a = _mm256_loadu_pd(xs.data() + i);
            __m256d b = _mm256_loadu_pd(xs.data() + i + 1);
            vbest = _mm256_max_pd(vbest, _mm256_sub_pd(b, a));
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, vbest);
        for (double v : lanes)
            if (v > best) best = v;
    }
    for (; i < gaps; ++i) {
        double g = xs[i + 1] - xs[i];
        if (g > best) best = g;
    }
    // The max above is a subtraction of the same operands the scalar kernel
    // uses, so re-deriving the first index by exact equality is safe.
    for (std::size_t j = 0; j < gaps; ++j)
        if (xs[j + 1] - xs[j] == best) return {best, j};
    return {best, 0};  // unreachable for valid input
}

}  // namespace disp::kernels

#endif  // DISPBOX_HAVE_AVX2
