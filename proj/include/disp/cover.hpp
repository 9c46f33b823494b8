// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "disp/geometry.hpp"
#include "disp/solvers.hpp"

// Certified dispersion via a finite grid family. With resolution m, the
// family consists of boxes whose endpoints are multiples of 1/m. The largest
// empty member gives a lower bound for the dispersion; shrinking an arbitrary
// empty box inward to grid lines loses less than 1/m per endpoint and there
// are 2d endpoints, so the dispersion is below lower + 2d/m. Choosing
// m = ceil(2d/delta) makes the interval width at most delta.

namespace disp {

struct GridCoverConfig {
    double delta;                            // requested interval width, in (0,1]
    std::uint64_t budget = 100'000'000;      // search work limit

    int resolution(int dim) const;           // m = ceil(2*dim/delta)
};

struct CertifiedResult {
    CertifiedValue value;
    AxisBox witness;  // attains value.lower within the grid family
    int resolution;
};

struct PeriodicCertifiedResult {
    CertifiedValue value;
    std::optional<PeriodicBox> witness;  // absent iff lower == 0
    int resolution;
};

CertifiedResult certified(const PointSet& points, const GridCoverConfig& cfg);
PeriodicCertifiedResult certified_periodic(const PointSet& points, const GridCoverConfig& cfg);

// Exact maximum over the grid family at resolution m (m >= 1). Fast closed
// paths exist for d <= 3; otherwise a pruned recursive search runs under the
// budget (counting candidate interval pairs, or grid cells touched by the
// fast paths).
ExactResult grid_max(const PointSet& points, int m, std::uint64_t budget = 100'000'000);
PeriodicExactResult grid_max_periodic(const PointSet& points, int m,
                                      std::uint64_t budget = 100'000'000);

// The recursive search without the fast paths; exposed so tests can check the
// two agree.
ExactResult grid_max_generic(const PointSet& points, int m,
                             std::uint64_t budget = 100'000'000);

// Virtual coordinate of x on the grid of resolution m: 2j when x equals the
// double j/m, otherwise 2j+1 where j/m < x < (j+1)/m (double comparisons).
// Exposed for tests.
int grid_virtual_coord(double x, int m);

}  // namespace disp
