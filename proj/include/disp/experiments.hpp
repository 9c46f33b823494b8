// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disp/geometry.hpp"
#include "disp/rng.hpp"

// Seeded Monte Carlo experiments. Replicate i always uses the engine seeded
// with child_seed(seed, i) and draws coordinates point-major, so every report
// is a pure function of its config, independent of thread count.

namespace disp::mc {

enum class Method { Exact, Cover };

const char* method_name(Method m);

struct SimConfig {
    std::int64_t n = 0;
    int d = 1;
    std::int64_t reps = 2;  // >= 2: confidence intervals need a variance
    std::uint64_t seed = 0;
    Method method = Method::Exact;
    bool periodic = false;
    double delta = 0.1;                  // cover method only
    std::uint64_t budget = 100'000'000;  // search budget per replicate
    double confidence = 0.95;
    int threads = 1;
};

// Outcome of holding a report up against one reference bound.
struct Check {
    std::string name;
    double bound;     // reference value (NaN when not applicable)
    bool applicable;  // preconditions of the bound hold and stats exist
    bool pass;        // meaningful only when applicable
    std::string note;
};

struct EstimateReport {
    SimConfig cfg;
    // Statistics of the dispersion value per replicate; for the cover method
    // these describe the certified lower edge.
    double mean = 0, stddev = 0, ci_half = 0;
    // Certified upper edge statistics (cover method only, else NaN).
    double mean_upper, stddev_upper, ci_half_upper;
    int resolution = 0;  // grid resolution (cover method only)
    std::vector<Check> checks;
};

// Mean dispersion of n i.i.d. uniform points, estimated over cfg.reps
// replicates, checked against the closed-form expectation bounds.
EstimateReport estimate_expected_dispersion(const SimConfig& cfg);

struct InverseConfig {
    double eps = 0.1;
    int d = 1;
    std::int64_t reps = 200;
    std::uint64_t seed = 0;
    Method method = Method::Exact;
    double delta = 0.05;
    std::uint64_t budget = 100'000'000;
    double confidence = 0.95;
    int threads = 1;
    std::int64_t max_n = 1'000'000;  // growth cap for the doubling phase
};

struct InverseEvaluation {
    std::int64_t n;
    double mean, ci_half;
    double score;  // conservative upper read: mean (+ upper edge) + ci
};

struct InverseReport {
    InverseConfig cfg;
    std::int64_t n_hat;  // first n whose score drops to <= eps
    // score(bracket_lo) > eps >= score(bracket_hi); bracket_lo is 0 when
    // n = 1 already meets the target.
    std::int64_t bracket_lo, bracket_hi;
    std::vector<InverseEvaluation> evaluations;  // in evaluation order
    std::vector<Check> checks;          // inverse-bound comparison when eps allows
};

// Smallest n with estimated mean dispersion <= eps: doubling then bisection
// on the conservative score. Statistical, reported with its bracket.
InverseReport estimate_inverse(const InverseConfig& cfg);

struct CouponConfig {
    std::int64_t ell = 2;       // number of slabs / coupon types
    std::int64_t n = -1;        // draw count; -1 means floor((H_ell - 2) ell)
    std::int64_t reps = 2;
    std::uint64_t seed = 0;
    double confidence = 0.95;
    int threads = 1;
};

struct CouponReport {
    CouponConfig cfg;
    std::int64_t n_used;         // resolved draw count
    double tail_probability;     // P(collection time > n_used), empirical
    double tail_se;
    double tau_mean, tau_stddev, tau_ci_half;
    double expected_tau;         // ell H_ell
    double variance_bound;       // (pi^2/6) ell^2
    std::vector<Check> checks;
};

// Collection time of ell uniform coupon types, versus its mean, variance
// bound, and the tail inequality used for the log(n)/(9n) lower bound.
CouponReport simulate_coupon(const CouponConfig& cfg);

struct AnchoredConfig {
    std::int64_t ell = 1;
    int d = 1;
    std::int64_t reps = 2;
    std::uint64_t seed = 0;
    double confidence = 0.95;
    int threads = 1;
};

struct AnchoredReport {
    AnchoredConfig cfg;
    std::int64_t empty_count;    // replicates whose constructed box was empty
    double volume_mean, volume_stddev;
    double product_mean, product_stddev, product_ci_half;
    double max_coord_mean;       // mean of the per-point max coordinate
    double product_target;       // (d/(d+1))^ell
    double closed_form_lower;    // e^{-ell/d}
    std::vector<Check> checks;
};

// Anchored empty-box construction: per replicate, draw ell points, take
// a_j = min over points whose largest coordinate sits in dimension j (ties to
// the smallest index), and form prod [0, a_j). Throws std::logic_error if a
// constructed box ever contains a point in its interior.
AnchoredReport simulate_anchored_box(const AnchoredConfig& cfg);

// The a_j endpoints of that construction for one fixed point set.
std::vector<double> anchored_box(const PointSet& points);

struct GapsConfig {
    std::int64_t n = 2;
    std::int64_t reps = 1;
    std::uint64_t seed = 0;
    double confidence = 0.95;
    int threads = 1;
};

struct GapsReport {
    GapsConfig cfg;
    double gap_mean, gap_stddev;      // largest spacing V_n
    double exact_gap_mean;            // H_{n+1}/(n+1)
    double stat_mean, stat_stddev, stat_ci_half;  // (n+1) V_n - log(n+1)
    double stat_q10, stat_q50, stat_q90;
    double gamma;                     // Euler-Mascheroni reference
    bool asymptotic;                  // n large enough for the Gumbel read
    std::vector<Check> checks;
};

// Largest spacing of n uniform points on [0,1] (the circle picture with n+1
// points): exact finite-n mean, and the recentred statistic drifting to the
// Gumbel mean. Variance-based checks are flagged off for reps < 2.
GapsReport simulate_circle_gaps(const GapsConfig& cfg);

struct SplitConfig {
    std::int64_t n = 3;  // >= 3
    std::int64_t reps = 2;
    std::uint64_t seed = 0;
    double confidence = 0.95;
    int threads = 1;
};

struct SplitReport {
    SplitConfig cfg;
    std::int64_t ell;            // ceil((1+e) n / log n) slabs
    double empty_probability;    // P(some slab unhit), empirical
    double se;
    double implied_lower;        // empty_probability / ell
    double reference_lower;      // log(n)/(9n)
    std::vector<Check> checks;
};

// Slab-occupancy experiment behind the dimension-free lower bound.
SplitReport simulate_split_lower_bound(const SplitConfig& cfg);

// n i.i.d. uniform points in [0,1]^d drawn point-major from the engine.
PointSet sample_uniform(rng::Engine& g, std::int64_t n, int d);

}  // namespace disp::mc
