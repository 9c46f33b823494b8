// SPDX-License-Identifier: Apache-2.0
#include "disp/solvers.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "disp/errors.hpp"
#include "disp/kernels.hpp"

namespace disp {

namespace {

void require_dim(const PointSet& p, int d, const char* who) {
    if (p.dim() != d)
        throw std::invalid_argument(std::string(who) + ": point set must have dimension "
                                    + std::to_string(d) + ", got " + std::to_string(p.dim()));
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

ExactResult exact_1d(const PointSet& points) {
    require_dim(points, 1, "exact_1d");
    std::vector<double> xs;
    xs.reserve(points.size() + 2);
    xs.push_back(0.0);
    xs.insert(xs.end(), points.column(0).begin(), points.column(0).end());
    xs.push_back(1.0);
    std::sort(xs.begin(), xs.end());
    auto [gap, i] = kernels::max_adjacent_gap(xs);
    return {gap, AxisBox({xs[i]}, {xs[i + 1]})};
}

PeriodicExactResult exact_1d_periodic(const PointSet& points) {
    require_dim(points, 1, "exact_1d_periodic");
    if (points.size() == 0) return {1.0, PeriodicBox({0.0}, {0.0})};

    std::vector<double> xs(points.column(0).begin(), points.column(0).end());
    for (double& x : xs)
        if (x == 1.0) x = 0.0;  // torus identification
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();

    // Wrap-around arc from the largest point back to the smallest. For n = 1
    // this is (x, x): the whole circle minus the point.
    double best = xs[0] + 1.0 - xs[n - 1];
    double a = xs[n - 1], b = xs[0];
    if (n >= 2) {
        auto [gap, i] = kernels::max_adjacent_gap(xs);
        // Prefer the interior gap on ties: its left endpoint is never larger.
        if (gap > best || (gap == best && (xs[i] < a || (xs[i] == a && xs[i + 1] < b)))) {
            best = gap;
            a = xs[i];
            b = xs[i + 1];
        }
    }
    return {best, PeriodicBox({a}, {b})};
}

ExactResult exact_2d(const PointSet& points) {
    require_dim(points, 2, "exact_2d");
    std::size_t n = points.size();
    if (n == 0) return {1.0, AxisBox::unit(2)};

    auto xs = points.column(0);
    auto ys = points.column(1);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (xs[i] != xs[j]) return xs[i] < xs[j];
        return ys[i] < ys[j];
    });
    std::vector<double> px(n), py(n);
    for (std::size_t i = 0; i < n; ++i) {
        px[i] = xs[order[i]];
        py[i] = ys[order[i]];
    }

    std::vector<double> xlo_cands(xs.begin(), xs.end());
    xlo_cands.push_back(0.0);
    xlo_cands = sorted_unique(std::move(xlo_cands));
    std::vector<double> xhi_cands(xs.begin(), xs.end());
    xhi_cands.push_back(1.0);
    xhi_cands = sorted_unique(std::move(xhi_cands));

    double best_vol = -1.0;
    std::array<double, 4> best_key{};  // xlo, xhi, ylo, yhi

    std::vector<double> ylist;
    ylist.reserve(n + 2);
    for (double xlo : xlo_cands) {
        ylist.assign({0.0, 1.0});
        // First point strictly right of the strip's left edge.
        std::size_t ptr = static_cast<std::size_t>(
            std::upper_bound(px.begin(), px.end(), xlo) - px.begin());
        for (double xhi : xhi_cands) {
            if (!(xhi > xlo)) continue;
            while (ptr < n && px[ptr] < xhi) {
                ylist.insert(std::upper_bound(ylist.begin(), ylist.end(), py[ptr]), py[ptr]);
                ++ptr;
            }
            auto [gap, gi] = kernels::max_adjacent_gap(ylist);
            double vol = (xhi - xlo) * gap;
            if (vol > best_vol) {
                best_vol = vol;
                best_key = {xlo, xhi, ylist[gi], ylist[gi + 1]};
            }
        }
    }
    return {best_vol, AxisBox({best_key[0], best_key[2]}, {best_key[1], best_key[3]})};
}

namespace {

struct BruteState {
    const PointSet* points;
    int d;
    std::vector<std::vector<double>> lows, highs;
    std::uint64_t budget, visited = 0;
    double best_vol = -1.0;
    std::vector<double> best_lo, best_hi;
    std::vector<double> cur_lo, cur_hi;
    std::vector<std::vector<std::size_t>> scratch;  // filtered actives per depth

    void record(int depth) {
        best_lo.assign(cur_lo.begin(), cur_lo.begin() + depth + 1);
        best_hi.assign(cur_hi.begin(), cur_hi.begin() + depth + 1);
        best_lo.resize(static_cast<std::size_t>(d), 0.0);
        best_hi.resize(static_cast<std::size_t>(d), 1.0);
    }

    void rec(int depth, double prefvol, std::span<const std::size_t> active) {
        auto col = points->column(depth);
        auto ku = static_cast<std::size_t>(depth);
        for (double lo : lows[ku]) {
            for (double hi : highs[ku]) {
                if (!(hi > lo)) continue;
                if (++visited > budget) throw BudgetExceeded(budget, visited);
                double v = prefvol * (hi - lo);
                if (v <= best_vol) continue;
                auto& child = scratch[ku];
                child.clear();
                for (std::size_t i : active) {
                    double x = col[i];
                    if (x > lo && x < hi) child.push_back(i);
                }
                cur_lo[ku] = lo;
                cur_hi[ku] = hi;
                if (child.empty()) {
                    // Remaining dimensions take the full interval [0,1].
                    best_vol = v;
                    record(depth);
                } else if (depth + 1 < d) {
                    rec(depth + 1, v, child);
                }
            }
        }
    }
};

}  // namespace

ExactResult brute_force(const PointSet& points, const BruteForceOptions& opts) {
    int d = points.dim();
    std::size_t n = points.size();
    if (n == 0) return {1.0, AxisBox::unit(d)};

    BruteState st;
    st.points = &points;
    st.d = d;
    st.budget = opts.budget;
    st.lows.resize(static_cast<std::size_t>(d));
    st.highs.resize(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        auto ku = static_cast<std::size_t>(k);
        std::vector<double> lo(points.column(k).begin(), points.column(k).end());
        std::vector<double> hi = lo;
        lo.push_back(0.0);
        hi.push_back(1.0);
        st.lows[ku] = sorted_unique(std::move(lo));
        st.highs[ku] = sorted_unique(std::move(hi));
    }
    st.cur_lo.resize(static_cast<std::size_t>(d));
    st.cur_hi.resize(static_cast<std::size_t>(d));
    st.scratch.assign(static_cast<std::size_t>(d), {});

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    st.rec(0, 1.0, all);
    return {st.best_vol, AxisBox(std::move(st.best_lo), std::move(st.best_hi))};
}

double single_point_value(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("single_point_value: point must have dim >= 1");
    double v = 0.0;
    for (double c : x) {
        if (!(c >= 0.0 && c <= 1.0))
            throw std::invalid_argument("single_point_value: coordinate outside [0,1]");
        v = std::max(v, std::max(c, 1.0 - c));
    }
    return v;
}

}  // namespace disp
