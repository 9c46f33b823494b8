// SPDX-License-Identifier: Apache-2.0
#include "disp/cover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "disp/errors.hpp"

namespace disp {

namespace {

using u128 = unsigned __int128;

double units_volume(std::span<const int> widths, int m) {
    double v = 1.0;
    for (int w : widths) v *= static_cast<double>(w) / m;
    return v;
}

double grid_line(int j, int m) {
    return static_cast<double>(j) / m;
}

// Per-point virtual coordinates, one row per surviving point, column-major.
struct Classified {
    std::vector<std::vector<int>> v;  // v[k][i]
    std::size_t count = 0;
    bool any_exact = false;
};

Classified classify(const PointSet& points, int m, bool periodic) {
    int d = points.dim();
    Classified out;
    out.v.assign(static_cast<std::size_t>(d), {});
    std::vector<int> row(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool drop = false;
        bool exact = false;
        for (int k = 0; k < d; ++k) {
            double x = points.coord(i, k);
            if (periodic && x == 1.0) x = 0.0;
            int v = grid_virtual_coord(x, m);
            // On [0,1]^d the cube faces never lie strictly inside any box,
            // so such a point can be ignored. On the torus nothing drops.
            if (!periodic && (v == 0 || v == 2 * m)) {
                drop = true;
                break;
            }
            if (v % 2 == 0) exact = true;
            row[static_cast<std::size_t>(k)] = v;
        }
        if (drop) continue;
        for (int k = 0; k < d; ++k) out.v[static_cast<std::size_t>(k)].push_back(row[static_cast<std::size_t>(k)]);
        ++out.count;
        out.any_exact = out.any_exact || exact;
    }
    return out;
}

struct RectU {
    long long area = 0;
    int r0 = 0, r1 = -1, c0 = 0, c1 = -1;
};

struct RectScratch {
    std::vector<int> heights;
    std::vector<std::pair<int, int>> stk;  // (start column, height)
};

// Largest all-zero rectangle of a rows x cols byte mask (1 = blocked).
RectU largest_zero_rect(const std::uint8_t* mask, int rows, int cols, RectScratch& scr,
                        std::uint64_t& visited, std::uint64_t budget) {
    scr.heights.assign(static_cast<std::size_t>(cols), 0);
    RectU best;
    for (int r = 0; r < rows; ++r) {
        visited += static_cast<std::uint64_t>(cols);
        if (visited > budget) throw BudgetExceeded(budget, visited);
        for (int c = 0; c < cols; ++c) {
            auto cu = static_cast<std::size_t>(c);
            scr.heights[cu] = mask[static_cast<std::size_t>(r) * cols + cu] ? 0 : scr.heights[cu] + 1;
        }
        scr.stk.clear();
        for (int c = 0; c <= cols; ++c) {
            int h = c < cols ? scr.heights[static_cast<std::size_t>(c)] : 0;
            int start = c;
            while (!scr.stk.empty() && scr.stk.back().second > h) {
                auto [s, ph] = scr.stk.back();
                scr.stk.pop_back();
                long long area = static_cast<long long>(ph) * (c - s);
                if (area > best.area) best = {area, r - ph + 1, r, s, c - 1};
                start = s;
            }
            if (h > 0 && (scr.stk.empty() || scr.stk.back().second < h))
                scr.stk.emplace_back(start, h);
        }
    }
    return best;
}

struct IntBox {
    std::vector<int> lo, hi;  // grid indices
};

ExactResult plain_result(const IntBox& b, int m) {
    std::size_t d = b.lo.size();
    std::vector<double> lo(d), hi(d);
    std::vector<int> widths(d);
    for (std::size_t k = 0; k < d; ++k) {
        lo[k] = grid_line(b.lo[k], m);
        hi[k] = grid_line(b.hi[k], m);
        widths[k] = b.hi[k] - b.lo[k];
    }
    return {units_volume(widths, m), AxisBox(std::move(lo), std::move(hi))};
}

// ---- fast paths (d <= 3, no grid-exact coordinates) --------------------

ExactResult fast_1d(const Classified& cls, int m, std::uint64_t budget) {
    if (static_cast<std::uint64_t>(m) > budget)
        throw BudgetExceeded(budget, static_cast<std::uint64_t>(m));
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(m), 0);
    for (int v : cls.v[0]) blocked[static_cast<std::size_t>((v - 1) / 2)] = 1;
    int best_len = 0, best_start = 0, cur = 0;
    for (int c = 0; c < m; ++c) {
        cur = blocked[static_cast<std::size_t>(c)] ? 0 : cur + 1;
        if (cur > best_len) {
            best_len = cur;
            best_start = c - cur + 1;
        }
    }
    if (best_len == 0) return {0.0, AxisBox({0.0}, {0.0})};
    return plain_result({{best_start}, {best_start + best_len}}, m);
}

ExactResult fast_2d(const Classified& cls, int m, std::uint64_t budget) {
    auto mu = static_cast<std::uint64_t>(m);
    if (mu * mu > budget) throw BudgetExceeded(budget, mu * mu);
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(m) * m, 0);
    for (std::size_t i = 0; i < cls.count; ++i) {
        int c0 = (cls.v[0][i] - 1) / 2;
        int c1 = (cls.v[1][i] - 1) / 2;
        mask[static_cast<std::size_t>(c0) * m + static_cast<std::size_t>(c1)] = 1;
    }
    RectScratch scr;
    std::uint64_t visited = 0;
    RectU r = largest_zero_rect(mask.data(), m, m, scr, visited, budget);
    if (r.area == 0) return {0.0, AxisBox({0.0, 0.0}, {0.0, 0.0})};
    return plain_result({{r.r0, r.c0}, {r.r1 + 1, r.c1 + 1}}, m);
}

ExactResult fast_3d(const Classified& cls, int m, std::uint64_t budget) {
    auto mu = static_cast<u128>(m);
    if (mu * mu * mu * (mu + 1) > budget)
        throw BudgetExceeded(budget, static_cast<std::uint64_t>(std::min<u128>(
                                         mu * mu * mu * (mu + 1), ~std::uint64_t{0})));
    std::size_t plane = static_cast<std::size_t>(m) * m;
    std::vector<std::uint8_t> slices(plane * static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < cls.count; ++i) {
        int c0 = (cls.v[0][i] - 1) / 2;
        int c1 = (cls.v[1][i] - 1) / 2;
        int c2 = (cls.v[2][i] - 1) / 2;
        slices[static_cast<std::size_t>(c2) * plane + static_cast<std::size_t>(c0) * m
               + static_cast<std::size_t>(c1)] = 1;
    }
    std::vector<std::uint8_t> acc(plane);
    RectScratch scr;
    std::uint64_t visited = 0;
    long long best_units = 0;
    IntBox best;
    for (int z0 = 0; z0 < m; ++z0) {
        if (static_cast<long long>(m) * m * (m - z0) <= best_units) break;
        std::fill(acc.begin(), acc.end(), 0);
        for (int z1 = z0; z1 < m; ++z1) {
            const std::uint8_t* sl = slices.data() + static_cast<std::size_t>(z1) * plane;
            for (std::size_t t = 0; t < plane; ++t) acc[t] |= sl[t];
            visited += plane;
            if (visited > budget) throw BudgetExceeded(budget, visited);
            int zc = z1 - z0 + 1;
            if (static_cast<long long>(m) * m * zc <= best_units) continue;
            RectU r = largest_zero_rect(acc.data(), m, m, scr, visited, budget);
            long long units = r.area * zc;
            if (units > best_units) {
                best_units = units;
                best = {{r.r0, r.c0, z0}, {r.r1 + 1, r.c1 + 1, z1 + 1}};
            }
        }
    }
    if (best_units == 0)
        return {0.0, AxisBox({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0})};
    return plain_result(best, m);
}

// ---- generic search ------------------------------------------------------

struct PairCand {
    int lo, hi, len;
};

std::vector<PairCand> make_pairs(int m, bool periodic, std::uint64_t budget) {
    std::uint64_t count = periodic ? static_cast<std::uint64_t>(m) * m
                                   : static_cast<std::uint64_t>(m) * (m + 1) / 2;
    if (count > std::min<std::uint64_t>(budget, 50'000'000)) throw BudgetExceeded(budget, count);
    std::vector<PairCand> ps;
    ps.reserve(count);
    if (!periodic) {
        for (int lo = 0; lo < m; ++lo)
            for (int hi = lo + 1; hi <= m; ++hi) ps.push_back({lo, hi, hi - lo});
    } else {
        for (int lo = 0; lo < m; ++lo)
            for (int hi = 0; hi < m; ++hi)
                ps.push_back({lo, hi, lo < hi ? hi - lo : m - lo + hi});
    }
    std::sort(ps.begin(), ps.end(), [](const PairCand& a, const PairCand& b) {
        if (a.len != b.len) return a.len > b.len;
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    return ps;
}

bool pair_blocks(const PairCand& p, int v, bool periodic) {
    if (!periodic || p.lo < p.hi) return 2 * p.lo < v && v < 2 * p.hi;
    return v < 2 * p.hi || v > 2 * p.lo;
}

struct GenericSearch {
    int d, m;
    bool periodic;
    const Classified* cls;
    const std::vector<PairCand>* pairs;
    std::uint64_t budget, visited = 0;
    std::vector<u128> mpow;
    u128 best_units = 0;
    bool found = false;
    std::vector<PairCand> cur, best;
    std::vector<std::vector<std::size_t>> scratch;

    void record(int depth) {
        best.assign(cur.begin(), cur.begin() + depth + 1);
        // Unconstrained dimensions take the full interval / full circle.
        while (static_cast<int>(best.size()) < d)
            best.push_back(periodic ? PairCand{0, 0, m} : PairCand{0, m, m});
        found = true;
    }

    void rec(int depth, u128 units, std::span<const std::size_t> active) {
        auto ku = static_cast<std::size_t>(depth);
        const auto& vc = cls->v[ku];
        u128 rest = mpow[static_cast<std::size_t>(d - depth - 1)];
        for (const PairCand& pc : *pairs) {
            if (++visited > budget) throw BudgetExceeded(budget, visited);
            u128 u2 = units * static_cast<unsigned>(pc.len);
            if (u2 * rest <= best_units) break;  // pairs sorted by length
            auto& child = scratch[ku];
            child.clear();
            for (std::size_t i : active)
                if (pair_blocks(pc, vc[i], periodic)) child.push_back(i);
            cur[ku] = pc;
            if (child.empty()) {
                best_units = u2 * rest;
                record(depth);
            } else if (depth + 1 < d) {
                rec(depth + 1, u2, child);
            }
        }
    }
};

GenericSearch run_generic(const PointSet& points, int m, bool periodic, std::uint64_t budget,
                          const Classified& cls) {
    int d = points.dim();
    if (d * std::log2(static_cast<double>(m) + 1.0) > 120.0)
        throw std::invalid_argument("grid too large: m^d overflows the search accumulator");
    auto pairs = make_pairs(m, periodic, budget);
    GenericSearch gs;
    gs.d = d;
    gs.m = m;
    gs.periodic = periodic;
    gs.cls = &cls;
    gs.pairs = &pairs;
    gs.budget = budget;
    gs.mpow.resize(static_cast<std::size_t>(d) + 1);
    gs.mpow[0] = 1;
    for (int j = 1; j <= d; ++j)
        gs.mpow[static_cast<std::size_t>(j)] = gs.mpow[static_cast<std::size_t>(j - 1)] * static_cast<unsigned>(m);
    gs.cur.resize(static_cast<std::size_t>(d));
    gs.scratch.assign(static_cast<std::size_t>(d), {});
    std::vector<std::size_t> all(cls.count);
    for (std::size_t i = 0; i < cls.count; ++i) all[i] = i;
    gs.rec(0, 1, all);
    return gs;
}

void validate_grid_args(const PointSet& points, int m, std::uint64_t budget) {
    (void)points;
    if (m < 1) throw std::invalid_argument("grid resolution must be >= 1, got " + std::to_string(m));
    if (budget == 0) throw std::invalid_argument("budget must be positive");
}

}  // namespace

int grid_virtual_coord(double x, int m) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("coordinate outside [0,1]");
    if (m < 1) throw std::invalid_argument("grid resolution must be >= 1");
    double xm = x * static_cast<double>(m);
    int j = xm >= static_cast<double>(m) ? m : static_cast<int>(xm);
    while (j > 0 && x < grid_line(j, m)) --j;
    while (j < m && x >= grid_line(j + 1, m)) ++j;
    if (x == grid_line(j, m)) return 2 * j;
    return 2 * j + 1;
}

ExactResult grid_max(const PointSet& points, int m, std::uint64_t budget) {
    validate_grid_args(points, m, budget);
    Classified cls = classify(points, m, false);
    if (cls.count == 0) return {1.0, AxisBox::unit(points.dim())};
    if (points.dim() <= 3 && !cls.any_exact) {
        switch (points.dim()) {
            case 1: return fast_1d(cls, m, budget);
            case 2: return fast_2d(cls, m, budget);
            default: return fast_3d(cls, m, budget);
        }
    }
    GenericSearch gs = run_generic(points, m, false, budget, cls);
    if (!gs.found) {
        std::size_t d = static_cast<std::size_t>(points.dim());
        return {0.0, AxisBox(std::vector<double>(d, 0.0), std::vector<double>(d, 0.0))};
    }
    IntBox b;
    for (const PairCand& pc : gs.best) {
        b.lo.push_back(pc.lo);
        b.hi.push_back(pc.hi);
    }
    return plain_result(b, m);
}

ExactResult grid_max_generic(const PointSet& points, int m, std::uint64_t budget) {
    validate_grid_args(points, m, budget);
    Classified cls = classify(points, m, false);
    if (cls.count == 0) return {1.0, AxisBox::unit(points.dim())};
    GenericSearch gs = run_generic(points, m, false, budget, cls);
    if (!gs.found) {
        std::size_t d = static_cast<std::size_t>(points.dim());
        return {0.0, AxisBox(std::vector<double>(d, 0.0), std::vector<double>(d, 0.0))};
    }
    IntBox b;
    for (const PairCand& pc : gs.best) {
        b.lo.push_back(pc.lo);
        b.hi.push_back(pc.hi);
    }
    return plain_result(b, m);
}

PeriodicExactResult grid_max_periodic(const PointSet& points, int m, std::uint64_t budget) {
    validate_grid_args(points, m, budget);
    int d = points.dim();
    Classified cls = classify(points, m, true);
    if (cls.count == 0) {
        std::size_t du = static_cast<std::size_t>(d);
        return {1.0, PeriodicBox(std::vector<double>(du, 0.0), std::vector<double>(du, 0.0))};
    }
    GenericSearch gs = run_generic(points, m, true, budget, cls);
    if (!gs.found) return {0.0, std::nullopt};
    std::vector<double> a, bb;
    std::vector<int> widths;
    for (const PairCand& pc : gs.best) {
        a.push_back(grid_line(pc.lo, m));
        bb.push_back(grid_line(pc.hi, m));
        widths.push_back(pc.len);
    }
    return {units_volume(widths, m), PeriodicBox(std::move(a), std::move(bb))};
}

int GridCoverConfig::resolution(int dim) const {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("delta must be in (0,1], got " + std::to_string(delta));
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    double m = std::ceil(2.0 * dim / delta);
    if (m > 1e9) throw std::invalid_argument("delta too small: grid resolution exceeds 1e9");
    return static_cast<int>(m);
}

CertifiedResult certified(const PointSet& points, const GridCoverConfig& cfg) {
    int m = cfg.resolution(points.dim());
    ExactResult g = grid_max(points, m, cfg.budget);
    double slack = 2.0 * points.dim() / m;
    return {CertifiedValue(g.value, std::min(1.0, g.value + slack)), std::move(g.witness), m};
}

PeriodicCertifiedResult certified_periodic(const PointSet& points, const GridCoverConfig& cfg) {
    int m = cfg.resolution(points.dim());
    PeriodicExactResult g = grid_max_periodic(points, m, cfg.budget);
    double slack = 2.0 * points.dim() / m;
    return {CertifiedValue(g.value, std::min(1.0, g.value + slack)), std::move(g.witness), m};
}

}  // namespace disp
