// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Core value types for dispersion computations on [0,1]^d.
//
// Convention: a candidate box is closed, but emptiness is judged against its
// open interior. A point lying on a face does not violate emptiness, so the
// supremum over empty boxes is attained and every solver can return a witness.

namespace disp {

class PointSet {
public:
    // `flat` is row-major: point i occupies flat[i*dim .. i*dim+dim-1].
    // Every coordinate must lie in [0,1]; dim must be >= 1.
    PointSet(int dim, std::vector<double> flat);

    static PointSet empty(int dim) { return PointSet(dim, {}); }

    int dim() const { return dim_; }
    std::size_t size() const { return n_; }

    double coord(std::size_t i, int k) const { return cols_[static_cast<std::size_t>(k)][i]; }

    // Contiguous array of coordinate k across all points.
    std::span<const double> column(int k) const { return cols_[static_cast<std::size_t>(k)]; }

    std::vector<double> point(std::size_t i) const;
    std::vector<double> flat() const;  // row-major copy

private:
    int dim_;
    std::size_t n_;
    std::vector<std::vector<double>> cols_;
};

// Axis-parallel box prod_k [lo_k, hi_k] inside [0,1]^d.
// Invariants: 0 <= lo_k <= hi_k <= 1, dimensions match, dim >= 1.
struct AxisBox {
    AxisBox(std::vector<double> lo, std::vector<double> hi);
    static AxisBox unit(int dim);

    int dim() const { return static_cast<int>(lo.size()); }
    double volume() const;

    std::vector<double> lo, hi;
};

// Box on the torus: product of circle arcs. Arc k is the open interval
// (a_k, b_k) when a_k < b_k, and the wrap-around arc [0,1] \ [b_k, a_k] when
// b_k <= a_k; the degenerate case a_k == b_k is the full circle minus one
// point, of length 1. Invariants: a_k, b_k in [0,1], dim >= 1.
struct PeriodicBox {
    PeriodicBox(std::vector<double> a, std::vector<double> b);

    int dim() const { return static_cast<int>(a.size()); }
    double volume() const;
    double arc_length(int k) const;

    std::vector<double> a, b;
};

// Certified two-sided enclosure of a dispersion value.
// Invariants: 0 <= lower <= upper <= 1.
struct CertifiedValue {
    CertifiedValue(double lower, double upper);
    double lower, upper;
};

// True iff no point lies in the open interior of the box.
bool box_is_empty(const AxisBox& box, const PointSet& points);

// True iff no point lies in the (open) arc product. Coordinates are read on
// the torus, so a coordinate of exactly 1 is treated as 0.
bool periodic_box_is_empty(const PeriodicBox& box, const PointSet& points);

// Membership of a single value in arc (a, b) under the wrap convention above.
inline bool in_arc(double x, double a, double b) {
    if (a < b) return a < x && x < b;
    return x < b || x > a;
}

}  // namespace disp
