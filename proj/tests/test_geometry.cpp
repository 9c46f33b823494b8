// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "disp/geometry.hpp"

using disp::AxisBox;
using disp::CertifiedValue;
using disp::PeriodicBox;
using disp::PointSet;

TEST_CASE("PointSet stores row-major input column-major") {
    PointSet p(2, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
    CHECK(p.dim() == 2);
    CHECK(p.size() == 3);
    CHECK(p.coord(0, 0) == 0.1);
    CHECK(p.coord(0, 1) == 0.2);
    CHECK(p.coord(2, 1) == 0.6);
    auto col1 = p.column(1);
    REQUIRE(col1.size() == 3);
    CHECK(col1[0] == 0.2);
    CHECK(col1[2] == 0.6);
    CHECK(p.point(1) == std::vector<double>{0.3, 0.4});
    CHECK(p.flat() == std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
}

TEST_CASE("PointSet validates its input") {
    CHECK_THROWS_AS(PointSet(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(2, {0.1}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(1, {1.5}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(1, {-0.1}), std::invalid_argument);
    CHECK_NOTHROW(PointSet(1, {0.0}));
    CHECK_NOTHROW(PointSet(1, {1.0}));
    CHECK(PointSet::empty(3).size() == 0);
    CHECK(PointSet::empty(3).dim() == 3);
}

TEST_CASE("AxisBox invariants and volume") {
    AxisBox b({0.25, 0.0}, {0.75, 0.5});
    CHECK(b.dim() == 2);
    CHECK(b.volume() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(AxisBox::unit(3).volume() == 1.0);
    CHECK_THROWS_AS(AxisBox({0.5}, {0.4}), std::invalid_argument);
    CHECK_THROWS_AS(AxisBox({-0.1}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(AxisBox({0.5}, {1.1}), std::invalid_argument);
    CHECK_THROWS_AS(AxisBox({0.1, 0.2}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(AxisBox({}, {}), std::invalid_argument);
    CHECK_NOTHROW(AxisBox({0.5}, {0.5}));  // degenerate but valid
}

TEST_CASE("PeriodicBox arcs, wrap, and the full-circle degenerate case") {
    PeriodicBox plain({0.25}, {0.75});
    CHECK(plain.arc_length(0) == doctest::Approx(0.5).epsilon(1e-15));
    PeriodicBox wrap({0.75}, {0.25});
    CHECK(wrap.arc_length(0) == doctest::Approx(0.5).epsilon(1e-15));
    PeriodicBox full({0.4}, {0.4});
    CHECK(full.arc_length(0) == 1.0);
    CHECK(full.volume() == 1.0);
    PeriodicBox two({0.75, 0.1}, {0.25, 0.9});
    CHECK(two.volume() == doctest::Approx(0.4).epsilon(1e-15));
    CHECK_THROWS_AS(PeriodicBox({1.5}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicBox({0.5, 0.5}, {0.5}), std::invalid_argument);
}

TEST_CASE("CertifiedValue enforces ordering and range") {
    CertifiedValue v(0.25, 0.5);
    CHECK(v.lower == 0.25);
    CHECK(v.upper == 0.5);
    CHECK_THROWS_AS(CertifiedValue(0.5, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(CertifiedValue(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(CertifiedValue(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("box_is_empty judges the open interior only") {
    PointSet p(2, {0.5, 0.5});
    CHECK(disp::box_is_empty(AxisBox({0.0, 0.0}, {0.5, 1.0}), p));   // face contact
    CHECK(disp::box_is_empty(AxisBox({0.5, 0.5}, {1.0, 1.0}), p));   // corner contact
    CHECK(!disp::box_is_empty(AxisBox({0.4, 0.4}, {0.6, 0.6}), p));  // interior hit
    CHECK(disp::box_is_empty(AxisBox({0.0, 0.0}, {1.0, 1.0}), PointSet::empty(2)));
    // only one coordinate inside is not enough
    CHECK(disp::box_is_empty(AxisBox({0.4, 0.6}, {0.6, 1.0}), p));
}

TEST_CASE("periodic_box_is_empty wraps and identifies 1 with 0") {
    PointSet p(1, {0.1});
    CHECK(!disp::periodic_box_is_empty(PeriodicBox({0.75}, {0.25}), p));  // wrap arc holds 0.1
    CHECK(disp::periodic_box_is_empty(PeriodicBox({0.25}, {0.75}), p));
    CHECK(disp::periodic_box_is_empty(PeriodicBox({0.1}, {0.1}), p));  // all but the point itself

    PointSet q(1, {1.0});  // lives at 0 on the torus
    CHECK(!disp::periodic_box_is_empty(PeriodicBox({0.75}, {0.25}), q));
    CHECK(disp::periodic_box_is_empty(PeriodicBox({0.0}, {0.75}), q));  // 0 is an endpoint

    PointSet r(2, {0.9, 0.5});
    CHECK(!disp::periodic_box_is_empty(PeriodicBox({0.8, 0.4}, {0.2, 0.6}), r));
    CHECK(disp::periodic_box_is_empty(PeriodicBox({0.8, 0.6}, {0.2, 0.4}), r));
}

TEST_CASE("in_arc covers all three arc shapes") {
    CHECK(disp::in_arc(0.5, 0.25, 0.75));
    CHECK(!disp::in_arc(0.25, 0.25, 0.75));
    CHECK(!disp::in_arc(0.75, 0.25, 0.75));
    CHECK(disp::in_arc(0.9, 0.75, 0.25));
    CHECK(disp::in_arc(0.1, 0.75, 0.25));
    CHECK(!disp::in_arc(0.5, 0.75, 0.25));
    CHECK(disp::in_arc(0.3, 0.4, 0.4));
    CHECK(!disp::in_arc(0.4, 0.4, 0.4));
}
