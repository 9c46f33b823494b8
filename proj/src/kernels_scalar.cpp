// SPDX-License-Identifier: Apache-2.0
#include <cassert>

#include "disp/kernels.hpp"

namespace disp::kernels {

bool any_point_in_open_box_scalar(std::span<const std::span<const double>> cols,
                                  std::span<const double> lo,
                                  std::span<const double> hi) {
    std::size_t n = cols.empty() ? 0 : cols[0].size();
    std::size_t d = cols.size();
    for (std::size_t i = 0; i < n; ++i) {
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

GapResult max_adjacent_gap_scalar(std::span<const double> xs) {
    assert(xs.size() >= 2);
    double best = xs[1] - xs[0];
    std::size_t idx = 0;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        double g = xs[i + 1] - xs[i];
        if (g > best) {
            best = g;
            idx = i;
        }
    }
    return {best, idx};
}

}  // namespace disp::kernels
