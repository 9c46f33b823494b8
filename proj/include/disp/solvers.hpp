// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "disp/geometry.hpp"

// Exact dispersion solvers. Each returns the maximum volume of a box whose
// open interior avoids every point, together with a witness attaining it.
// Ties are broken toward the lexicographically smallest witness under the key
// (lo_1, hi_1, lo_2, hi_2, ...), so results are reproducible across runs.

namespace disp {

struct ExactResult {
    double value;
    AxisBox witness;
};

// Periodic arcs always have positive length, so a family can lack an empty
// member entirely (value 0); the witness is absent exactly in that case.
struct PeriodicExactResult {
    double value;
    std::optional<PeriodicBox> witness;
};

// d = 1: largest gap between consecutive points (with the interval ends).
ExactResult exact_1d(const PointSet& points);

// d = 1 on the circle: largest wrap-around gap. For n = 0 the witness is the
// degenerate full arc (0, 0) of length 1.
PeriodicExactResult exact_1d_periodic(const PointSet& points);

// d = 2: sweep over candidate x-strips, max vertical gap per strip. O(n^3).
ExactResult exact_2d(const PointSet& points);

struct BruteForceOptions {
    // Counts candidate (lo, hi) interval pairs visited across the recursion;
    // BudgetExceeded is thrown beyond this.
    std::uint64_t budget = 100'000'000;
};

// Any d: enumerate boxes with faces on point coordinates or cube faces,
// pruned on the best volume so far. Exponential in d; intended for small
// instances and as reference for other solvers.
ExactResult brute_force(const PointSet& points, const BruteForceOptions& opts = {});

// Closed form for one point: max_k max(x_k, 1 - x_k). The best box keeps
// every other dimension full and cuts one side of the point.
double single_point_value(std::span<const double> x);

}  // namespace disp
