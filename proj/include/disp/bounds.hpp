// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Closed-form bounds on the expected dispersion of n i.i.d. uniform points
// in [0,1]^d, their inverses, and the survey bounds on the inverse of the
// minimal dispersion. Logarithms are natural unless a name says otherwise.

namespace disp::bounds {

struct ExpectationBounds {
    double lower;  // max(log(n)/(9n), d/(2e n))
    double upper;  // (9d/n) log(e n / d)
};

// Requires n > d >= 1.
ExpectationBounds expected_dispersion_bounds(std::int64_t n, int d);

struct InverseBounds {
    double n_lower;  // max((1/(9 eps)) log(1/(9 eps)), d/(2e eps))
    double n_upper;  // ceil(9 (1 + 1/e) (d/eps) log(9 (e+1)/eps))
};

// Requires 0 < eps < 1/(9e).
InverseBounds inverse_expected_dispersion_bounds(double eps, int d);

// One row of the minimal-dispersion survey table. Values too large for a
// double are reported in log10 form only (value is NaN then). `valid` is
// false when the inputs fall outside the bound's stated range or the bound
// degenerates (a log2(d) factor vanishing at d = 1).
struct TableEntry {
    std::string name;
    double value;
    double log10_value;
    bool valid;
    std::string note;
};

// Bounds on n(eps, d), the inverse of the minimal dispersion, for
// eps in (0,1): entries eq2_lower, larcher, krieg, rudolf, sosnovec,
// ullrich_vybiral (in that order).
std::vector<TableEntry> minimal_dispersion_table(double eps, int d);

// log of the delta-cover cardinality bound for the box family:
// 2d log(6e/delta) on the cube, 2d log(4d/delta) on the torus.
double cover_cardinality_log(double delta, int d, bool periodic);

struct ConditionalBound {
    double value;
    bool valid;  // the stated precondition holds
};

// delta + log_cover/n + 1/(n+1); requires n >= log_cover.
ConditionalBound expected_disp_cover_bound(std::int64_t n, double log_cover, double delta);

// (5d/n) log(2n) for the periodic dispersion; requires n >= 2d log(2n).
ConditionalBound periodic_expected_bound(std::int64_t n, int d);

// (l+1)/(n+l+1): factor relating E(disp of n points) to E(disp of l points).
double reduction_factor(std::int64_t n, std::int64_t l);

// (d/(d+1))^l: expectation of the anchored-box volume product.
double anchored_product_mean(std::int64_t l, int d);

// e^{-l/d}: the closed-form lower bound that the product mean dominates.
double anchored_lower_bound(std::int64_t l, int d);

// H_l = sum_{j=1..l} 1/j, compensated summation from the small terms up.
double harmonic(std::int64_t l);

}  // namespace disp::bounds
