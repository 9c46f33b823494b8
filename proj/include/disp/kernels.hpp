// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

// Inner-loop kernels with scalar reference implementations and SIMD variants
// selected at runtime. All variants return bit-identical results: they only
// compare and subtract the same operands, so dispatch never changes output.

namespace disp::kernels {

enum class Backend { Auto, Scalar, Avx2 };

const char* backend_name(Backend b);

// Backend actually used for the next kernel call.
Backend active_backend();

// True if `b` can run on this build/CPU. Auto is always supported.
bool backend_supported(Backend b);

// Force a backend (throws std::invalid_argument if unsupported). Auto resets
// to CPU detection.
void set_backend(Backend b);

// True iff some index i satisfies lo[k] < cols[k][i] < hi[k] for all k.
// All columns must have equal length.
bool any_point_in_open_box(std::span<const std::span<const double>> cols,
                           std::span<const double> lo,
                           std::span<const double> hi);

struct GapResult {
    double gap;
    std::size_t index;  // gap is xs[index+1] - xs[index], first maximizer
};

// Largest difference of adjacent entries of an ascending array, xs.size() >= 2.
GapResult max_adjacent_gap(std::span<const double> xs);

// Reference implementations (always available; used by dispatch and tests).
bool any_point_in_open_box_scalar(std::span<const std::span<const double>> cols,
                                  std::span<const double> lo,
                                  std::span<const double> hi);
GapResult max_adjacent_gap_scalar(std::span<const double> xs);

#ifdef DISPBOX_HAVE_AVX2
bool any_point_in_open_box_avx2(std::span<const std::span<const double>> cols,
                                std::span<const double> lo,
                                std::span<const double> hi);
GapResult max_adjacent_gap_avx2(std::span<const double> xs);
#endif

}  // namespace disp::kernels
