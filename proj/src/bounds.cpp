// SPDX-License-Identifier: Apache-2.0
#include "disp/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace disp::bounds {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kLog2Max = 1023.0;  // doubles overflow past 2^1024

double nan_if_huge(double log2v, double v) {
    return log2v < kLog2Max ? v : kNaN;
}

}  // namespace

ExpectationBounds expected_dispersion_bounds(std::int64_t n, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n <= d) throw std::invalid_argument("bounds require n > d");
    auto nd = static_cast<double>(n);
    double lower = std::max(std::log(nd) / (9.0 * nd), d / (2.0 * kE * nd));
    double upper = 9.0 * d / nd * std::log(kE * nd / d);
    return {lower, upper};
}

InverseBounds inverse_expected_dispersion_bounds(double eps, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(eps > 0.0 && eps < 1.0 / (9.0 * kE)))
        throw std::invalid_argument("inverse bounds require eps in (0, 1/(9e))");
    double lower = std::max(std::log(1.0 / (9.0 * eps)) / (9.0 * eps), d / (2.0 * kE * eps));
    double upper = std::ceil(9.0 * (1.0 + 1.0 / kE) * (d / eps) * std::log(9.0 * (kE + 1.0) / eps));
    return {lower, upper};
}

std::vector<TableEntry> minimal_dispersion_table(double eps, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0,1)");

    std::vector<TableEntry> t;
    double inv = 1.0 / eps;
    double log2d = std::log2(static_cast<double>(d));
    const char* d1_note = "degenerate at d = 1: the log2(d) factor vanishes";

    {
        // 2^{-3} eps^{-1} log2(d) <= n(eps, d), valid for eps < 1/8
        double v = 0.125 * inv * log2d;
        bool valid = eps < 0.125 && d >= 2;
        std::string note;
        if (eps >= 0.125) note = "requires eps < 1/8";
        else if (d < 2) note = d1_note;
        t.push_back({"eq2_lower", v, d >= 2 ? std::log10(v) : kNaN, valid, note});
    }
    {
        // ceil(2^{7d+1} eps^{-1})
        double log2v = (7.0 * d + 1.0) + std::log2(inv);
        double log10 = log2v * std::log10(2.0);
        double v = nan_if_huge(log2v, std::exp2(7.0 * d + 1.0) * inv);
        std::string note;
        if (std::isnan(v)) {
            note = "exceeds double range; log10 form only";
        } else if (log2v < 53.0) {
            v = std::ceil(v);
        } else {
            note = "ceiling omitted beyond integer precision";
        }
        bool valid = eps < 0.125;
        if (!valid) note = note.empty() ? "requires eps < 1/8" : note + "; requires eps < 1/8";
        t.push_back({"larcher", v, log10, valid, note});
    }
    {
        // min{(2d)^{ceil(log2(1/eps)-1)}, eps^{-1} ceil(log2(1/eps))^{d-1}}
        double k = std::ceil(std::log2(inv) - 1.0);
        if (k < 0.0) k = 0.0;
        double c = std::ceil(std::log2(inv));
        if (c < 1.0) c = 1.0;
        double log2t1 = k * std::log2(2.0 * d);
        double log2t2 = std::log2(inv) + (d - 1.0) * std::log2(c);
        double log2v = std::min(log2t1, log2t2);
        double v = nan_if_huge(log2v, std::min(std::pow(2.0 * d, k), inv * std::pow(c, d - 1.0)));
        t.push_back({"krieg", v, log2v * std::log10(2.0), true,
                     std::isnan(v) ? "exceeds double range; log10 form only" : ""});
    }
    {
        // 8 d eps^{-1} log(33 eps^{-1})
        double v = 8.0 * d * inv * std::log(33.0 * inv);
        t.push_back({"rudolf", v, std::log10(v), true, ""});
    }
    {
        // log2(d) B^{B^2+2} (4 log(B) + 1), B = ceil(1/eps); log read as natural
        double b = std::ceil(inv);
        double log2v = std::log2(log2d) + (b * b + 2.0) * std::log2(b)
                       + std::log2(4.0 * std::log(b) + 1.0);
        bool valid = d >= 2;
        double v = d >= 2 ? nan_if_huge(log2v, std::pow(b, b * b + 2.0) * log2d
                                                   * (4.0 * std::log(b) + 1.0))
                          : 0.0;
        std::string note = "inner log taken as natural";
        if (d < 2) note = d1_note;
        else if (std::isnan(v)) note += "; exceeds double range, log10 form only";
        t.push_back({"sosnovec", v, d >= 2 ? log2v * std::log10(2.0) : kNaN, valid, note});
    }
    {
        // 2^7 log2(d) eps^{-2} (1 + log2(1/eps))^2
        double f = 1.0 + std::log2(inv);
        double v = 128.0 * log2d * inv * inv * f * f;
        bool valid = d >= 2;
        t.push_back({"ullrich_vybiral", v, d >= 2 ? std::log10(v) : kNaN, valid,
                     d >= 2 ? "" : d1_note});
    }
    return t;
}

double cover_cardinality_log(double delta, int d, bool periodic) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must be in (0,1]");
    double inside = periodic ? 4.0 * d / delta : 6.0 * kE / delta;
    return 2.0 * d * std::log(inside);
}

ConditionalBound expected_disp_cover_bound(std::int64_t n, double log_cover, double delta) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(log_cover >= 0.0)) throw std::invalid_argument("log cover size must be >= 0");
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must be in (0,1]");
    auto nd = static_cast<double>(n);
    return {delta + log_cover / nd + 1.0 / (nd + 1.0), nd >= log_cover};
}

ConditionalBound periodic_expected_bound(std::int64_t n, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    auto nd = static_cast<double>(n);
    double value = 5.0 * d / nd * std::log(2.0 * nd);
    return {value, nd >= 2.0 * d * std::log(2.0 * nd)};
}

double reduction_factor(std::int64_t n, std::int64_t l) {
    if (n < 1 || l < 1) throw std::invalid_argument("n and l must be >= 1");
    return static_cast<double>(l + 1) / static_cast<double>(n + l + 1);
}

double anchored_product_mean(std::int64_t l, int d) {
    if (d < 1 || l < 1) throw std::invalid_argument("l and d must be >= 1");
    return std::pow(d / (d + 1.0), static_cast<double>(l));
}

double anchored_lower_bound(std::int64_t l, int d) {
    if (d < 1 || l < 1) throw std::invalid_argument("l and d must be >= 1");
    return std::exp(-static_cast<double>(l) / d);
}

double harmonic(std::int64_t l) {
    if (l < 0) throw std::invalid_argument("harmonic index must be >= 0");
    double s = 0.0, c = 0.0;
    for (std::int64_t j = l; j >= 1; --j) {
        double x = 1.0 / static_cast<double>(j);
        double t = s + x;
        if (std::abs(s) >= x)
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

}  // namespace disp::bounds
