// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "disp/bounds.hpp"
#include "disp/experiments.hpp"
#include "disp/rng.hpp"

namespace mc = disp::mc;

namespace {

const mc::Check& find_check(const std::vector<mc::Check>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c;
    REQUIRE_MESSAGE(false, ("missing check " + name));
    static mc::Check dummy;
    return dummy;
}

bool all_applicable_pass(const std::vector<mc::Check>& checks) {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

}  // namespace

TEST_CASE("sample_uniform is a pure function of the engine") {
    auto g1 = disp::rng::make_engine(9, 0);
    auto g2 = disp::rng::make_engine(9, 0);
    auto p1 = mc::sample_uniform(g1, 6, 3);
    auto p2 = mc::sample_uniform(g2, 6, 3);
    CHECK(p1.flat() == p2.flat());
    CHECK(p1.size() == 6);
    CHECK(p1.dim() == 3);
    for (double x : p1.flat()) CHECK((0.0 <= x && x < 1.0));

    auto g3 = disp::rng::make_engine(9, 1);  // different replicate, different stream
    auto p3 = mc::sample_uniform(g3, 6, 3);
    CHECK(p1.flat() != p3.flat());
}

TEST_CASE("estimate matches the single-point closed forms") {
    mc::SimConfig cfg;
    cfg.n = 1;
    cfg.d = 1;
    cfg.reps = 400;
    cfg.seed = 11;
    auto rep = mc::estimate_expected_dispersion(cfg);
    CHECK(std::abs(rep.mean - 0.75) < 0.05);
    CHECK(rep.stddev > 0.0);
    CHECK(std::isnan(rep.mean_upper));

    cfg.d = 2;
    auto rep2 = mc::estimate_expected_dispersion(cfg);
    CHECK(std::abs(rep2.mean - 5.0 / 6.0) < 0.05);
}

TEST_CASE("estimate is deterministic and thread-count invariant") {
    mc::SimConfig cfg;
    cfg.n = 6;
    cfg.d = 2;
    cfg.reps = 60;
    cfg.seed = 123;
    auto a = mc::estimate_expected_dispersion(cfg);
    auto b = mc::estimate_expected_dispersion(cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.stddev == b.stddev);

    cfg.threads = 4;
    auto c = mc::estimate_expected_dispersion(cfg);
    CHECK(a.mean == c.mean);  // bit-identical accumulation order
    CHECK(a.stddev == c.stddev);
    CHECK(a.ci_half == c.ci_half);
}

TEST_CASE("estimate bound checks and their applicability") {
    mc::SimConfig cfg;
    cfg.n = 50;
    cfg.d = 2;
    cfg.reps = 80;
    cfg.seed = 5;
    auto rep = mc::estimate_expected_dispersion(cfg);
    auto eb = disp::bounds::expected_dispersion_bounds(50, 2);
    const auto& lo = find_check(rep.checks, "expectation_lower_bound");
    CHECK(lo.applicable);
    CHECK(lo.pass);
    CHECK(lo.bound == eb.lower);
    const auto& hi = find_check(rep.checks, "expectation_upper_bound");
    CHECK(hi.applicable);
    CHECK(hi.pass);
    CHECK(hi.bound == eb.upper);

    cfg.n = 4;
    cfg.d = 4;
    auto small = mc::estimate_expected_dispersion(cfg);
    for (const char* name : {"expectation_lower_bound", "expectation_upper_bound"}) {
        const auto& c = find_check(small.checks, name);
        CHECK(!c.applicable);
        CHECK(std::isnan(c.bound));
        CHECK(c.note == "requires n > d");
    }
}

TEST_CASE("estimate with the cover method reports an enclosure") {
    mc::SimConfig cfg;
    cfg.n = 8;
    cfg.d = 2;
    cfg.reps = 40;
    cfg.seed = 21;
    cfg.method = mc::Method::Cover;
    cfg.delta = 0.2;
    auto rep = mc::estimate_expected_dispersion(cfg);
    CHECK(rep.resolution == 20);  // ceil(2*2/0.2)
    CHECK(rep.mean <= rep.mean_upper);
    CHECK(rep.mean_upper - rep.mean <= cfg.delta + 1e-12);
    CHECK(all_applicable_pass(rep.checks));

    // exact replicates on the same seed land inside the certified band
    cfg.method = mc::Method::Exact;
    auto exact = mc::estimate_expected_dispersion(cfg);
    CHECK(rep.mean <= exact.mean + 1e-12);
    CHECK(exact.mean <= rep.mean_upper + 1e-12);
}

TEST_CASE("periodic estimates") {
    mc::SimConfig cfg;
    cfg.n = 3;
    cfg.d = 1;
    cfg.reps = 60;
    cfg.seed = 33;
    cfg.periodic = true;
    auto rep = mc::estimate_expected_dispersion(cfg);
    CHECK(rep.mean > 0.0);
    const auto& up = find_check(rep.checks, "periodic_expectation_upper");
    CHECK(!up.applicable);  // 3 < 2 log(6)
    CHECK(up.note == "requires n >= 2d log(2n)");

    cfg.n = 30;  // above the threshold: the periodic upper bound applies
    auto big = mc::estimate_expected_dispersion(cfg);
    CHECK(find_check(big.checks, "periodic_expectation_upper").applicable);
    CHECK(all_applicable_pass(big.checks));

    cfg.n = 3;
    cfg.d = 2;
    CHECK_THROWS_AS(mc::estimate_expected_dispersion(cfg), std::invalid_argument);
    cfg.method = mc::Method::Cover;
    cfg.delta = 0.5;
    CHECK_NOTHROW(mc::estimate_expected_dispersion(cfg));
}

TEST_CASE("estimate configuration validation") {
    mc::SimConfig cfg;
    cfg.n = 0;
    cfg.d = 1;
    cfg.reps = 10;
    CHECK_THROWS_AS(mc::estimate_expected_dispersion(cfg), std::invalid_argument);
    cfg.n = 5;
    cfg.reps = 1;
    CHECK_THROWS_AS(mc::estimate_expected_dispersion(cfg), std::invalid_argument);
    cfg.reps = 10;
    cfg.confidence = 1.5;
    CHECK_THROWS_AS(mc::estimate_expected_dispersion(cfg), std::invalid_argument);
}

TEST_CASE("anchored box construction on fixed point sets") {
    // one point per dimension: each a_j is that point's top coordinate
    auto a = mc::anchored_box(disp::PointSet(2, {0.4, 0.7, 0.8, 0.3}));
    CHECK(a == std::vector<double>{0.8, 0.7});

    // both points top out in the second dimension; the first stays free
    auto b = mc::anchored_box(disp::PointSet(2, {0.25, 0.5, 0.7, 0.75}));
    CHECK(b == std::vector<double>{1.0, 0.5});

    // coordinate tie goes to the smallest dimension index
    auto t = mc::anchored_box(disp::PointSet(2, {0.5, 0.5}));
    CHECK(t == std::vector<double>{0.5, 1.0});

    // no points leaves the unit cube
    CHECK(mc::anchored_box(disp::PointSet::empty(3)) == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("anchored simulation hits its closed forms") {
    mc::AnchoredConfig cfg;
    cfg.ell = 4;
    cfg.d = 2;
    cfg.reps = 4000;
    cfg.seed = 77;
    auto rep = mc::simulate_anchored_box(cfg);
    CHECK(rep.empty_count == cfg.reps);  // construction is empty by design
    CHECK(rep.product_target == disp::bounds::anchored_product_mean(4, 2));
    CHECK(rep.closed_form_lower == disp::bounds::anchored_lower_bound(4, 2));
    CHECK(std::abs(rep.product_mean - rep.product_target) < 5 * rep.product_ci_half);
    CHECK(std::abs(rep.max_coord_mean - 2.0 / 3.0) < 0.02);
    CHECK(rep.volume_mean >= rep.product_mean - 1e-12);
    CHECK(all_applicable_pass(rep.checks));

    auto again = mc::simulate_anchored_box(cfg);
    CHECK(rep.product_mean == again.product_mean);
    cfg.threads = 3;
    auto threaded = mc::simulate_anchored_box(cfg);
    CHECK(rep.product_mean == threaded.product_mean);
}

TEST_CASE("coupon simulation against the collection-time facts") {
    mc::CouponConfig cfg;
    cfg.ell = 16;
    cfg.reps = 2000;
    cfg.seed = 13;
    auto rep = mc::simulate_coupon(cfg);
    double h = disp::bounds::harmonic(16);
    CHECK(rep.n_used == static_cast<std::int64_t>(std::floor((h - 2.0) * 16.0)));
    CHECK(rep.expected_tau == doctest::Approx(16.0 * h).epsilon(1e-14));
    CHECK(rep.variance_bound > 0.0);
    CHECK(rep.tail_probability > 0.5);
    CHECK(all_applicable_pass(rep.checks));

    auto again = mc::simulate_coupon(cfg);
    CHECK(rep.tau_mean == again.tau_mean);
    cfg.threads = 4;
    auto threaded = mc::simulate_coupon(cfg);
    CHECK(rep.tau_mean == threaded.tau_mean);
    CHECK(rep.tail_probability == threaded.tail_probability);

    // explicit draw budget beyond the tail threshold: check not applicable
    cfg.threads = 1;
    cfg.n = 200;
    auto loose = mc::simulate_coupon(cfg);
    CHECK(!find_check(loose.checks, "tail_above_half").applicable);

    // two coupon types cannot use the default budget, (H_2 - 2) is negative
    mc::CouponConfig two;
    two.ell = 2;
    two.reps = 10;
    CHECK_THROWS_AS(mc::simulate_coupon(two), std::invalid_argument);
    two.n = 5;
    CHECK_NOTHROW(mc::simulate_coupon(two));
}

TEST_CASE("circle gaps simulation") {
    mc::GapsConfig cfg;
    cfg.n = 50;
    cfg.reps = 400;
    cfg.seed = 29;
    auto rep = mc::simulate_circle_gaps(cfg);
    CHECK(rep.exact_gap_mean == doctest::Approx(disp::bounds::harmonic(51) / 51.0).epsilon(1e-14));
    CHECK(std::abs(rep.gap_mean - rep.exact_gap_mean) < 0.01);
    CHECK(rep.gamma == doctest::Approx(0.5772156649015329).epsilon(1e-15));
    CHECK(!rep.asymptotic);  // n below the asymptotic threshold
    CHECK(find_check(rep.checks, "largest_gap_mean").applicable);
    CHECK(!find_check(rep.checks, "recentred_gap_mean").applicable);
    CHECK(all_applicable_pass(rep.checks));
    CHECK(rep.stat_q10 <= rep.stat_q50);
    CHECK(rep.stat_q50 <= rep.stat_q90);

    auto again = mc::simulate_circle_gaps(cfg);
    CHECK(rep.gap_mean == again.gap_mean);
    cfg.threads = 5;
    auto threaded = mc::simulate_circle_gaps(cfg);
    CHECK(rep.gap_mean == threaded.gap_mean);
    CHECK(rep.stat_q50 == threaded.stat_q50);
}

TEST_CASE("single-replicate gaps degrade gracefully") {
    mc::GapsConfig cfg;
    cfg.n = 10;
    cfg.reps = 1;
    cfg.seed = 3;
    auto rep = mc::simulate_circle_gaps(cfg);
    CHECK(std::isnan(rep.stat_stddev));
    CHECK(rep.stat_q10 == rep.stat_q50);
    CHECK(rep.stat_q50 == rep.stat_q90);
    for (const auto& c : rep.checks) CHECK(!c.applicable);
}

TEST_CASE("split simulation implies the dimension-free lower bound") {
    mc::SplitConfig cfg;
    cfg.n = 50;
    cfg.reps = 1500;
    cfg.seed = 61;
    auto rep = mc::simulate_split_lower_bound(cfg);
    double expected_ell = std::ceil((1.0 + std::exp(1.0)) * 50.0 / std::log(50.0));
    CHECK(rep.ell == static_cast<std::int64_t>(expected_ell));
    CHECK(rep.empty_probability > 0.5);
    CHECK(rep.reference_lower == doctest::Approx(std::log(50.0) / 450.0).epsilon(1e-14));
    CHECK(rep.implied_lower >= rep.reference_lower);
    CHECK(all_applicable_pass(rep.checks));

    auto again = mc::simulate_split_lower_bound(cfg);
    CHECK(rep.empty_probability == again.empty_probability);
    cfg.threads = 2;
    auto threaded = mc::simulate_split_lower_bound(cfg);
    CHECK(rep.empty_probability == threaded.empty_probability);

    cfg.n = 2;
    CHECK_THROWS_AS(mc::simulate_split_lower_bound(cfg), std::invalid_argument);
}

TEST_CASE("inverse search brackets the target") {
    mc::InverseConfig cfg;
    cfg.eps = 0.2;
    cfg.d = 1;
    cfg.reps = 60;
    cfg.seed = 17;
    auto rep = mc::estimate_inverse(cfg);
    CHECK(rep.n_hat >= 1);
    CHECK(rep.bracket_hi == rep.n_hat);
    CHECK(rep.bracket_lo < rep.n_hat);
    bool found = false;
    for (const auto& e : rep.evaluations) {
        if (e.n == rep.n_hat) {
            CHECK(e.score <= cfg.eps);
            found = true;
        }
        if (e.n == rep.bracket_lo) CHECK(e.score > cfg.eps);
    }
    CHECK(found);

    auto again = mc::estimate_inverse(cfg);
    CHECK(rep.n_hat == again.n_hat);
    REQUIRE(rep.evaluations.size() == again.evaluations.size());
    for (std::size_t i = 0; i < rep.evaluations.size(); ++i) {
        CHECK(rep.evaluations[i].n == again.evaluations[i].n);
        CHECK(rep.evaluations[i].mean == again.evaluations[i].mean);
        CHECK(rep.evaluations[i].score == again.evaluations[i].score);
    }

    // the inverse bound checks only apply below 1/(9e)
    for (const auto& c : rep.checks) {
        CHECK(!c.applicable);
        CHECK(c.note == "requires eps < 1/(9e)");
    }
}

TEST_CASE("inverse search validation") {
    mc::InverseConfig cfg;
    cfg.eps = 0.0;
    CHECK_THROWS_AS(mc::estimate_inverse(cfg), std::invalid_argument);
    cfg.eps = 0.05;
    cfg.method = mc::Method::Cover;
    cfg.delta = 0.05;  // certification gap would never resolve the target
    CHECK_THROWS_AS(mc::estimate_inverse(cfg), std::invalid_argument);

    cfg.method = mc::Method::Exact;
    cfg.eps = 0.001;
    cfg.d = 1;
    cfg.reps = 4;
    cfg.seed = 1;
    cfg.max_n = 64;  // cap reached long before the target
    CHECK_THROWS_AS(mc::estimate_inverse(cfg), std::runtime_error);
}
