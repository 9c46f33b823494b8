// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace disp::stats {

// Neumaier-compensated sum, accumulated in index order (deterministic).
inline double sum(std::span<const double> xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

struct Moments {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample (n-1); NaN when count < 2
};

// Two-pass mean/stddev with compensated sums.
inline Moments moments(std::span<const double> xs) {
    Moments m;
    m.count = xs.size();
    if (xs.empty()) {
        m.mean = std::numeric_limits<double>::quiet_NaN();
        m.stddev = std::numeric_limits<double>::quiet_NaN();
        return m;
    }
    m.mean = sum(xs) / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        m.stddev = std::numeric_limits<double>::quiet_NaN();
        return m;
    }
    std::vector<double> sq(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double d = xs[i] - m.mean;
        sq[i] = d * d;
    }
    m.stddev = std::sqrt(sum(sq) / static_cast<double>(xs.size() - 1));
    return m;
}

// Inverse standard normal CDF, Acklam's rational approximation (|err| < 1.2e-9).
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p must be in (0,1)");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double plow = 0.02425;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5])
               / ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - plow) {
        q = p - 0.5;
        r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q
               / (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5])
           / ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

// Half-width of a two-sided normal confidence interval for the mean.
inline double ci_half_width(double stddev, std::size_t count, double confidence) {
    if (count < 2) return std::numeric_limits<double>::quiet_NaN();
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("ci_half_width: confidence must be in (0,1)");
    double z = normal_quantile(0.5 + confidence / 2.0);
    return z * stddev / std::sqrt(static_cast<double>(count));
}

// Type-7 (linear interpolation) quantile of a sorted sample.
inline double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile_sorted: empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile_sorted: q must be in [0,1]");
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= sorted.size()) return sorted.back();
    double frac = pos - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

}  // namespace disp::stats
