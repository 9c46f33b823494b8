// SPDX-License-Identifier: Apache-2.0
#include "disp/geometry.hpp"

#include <stdexcept>
#include <string>

#include "disp/kernels.hpp"

namespace disp {

namespace {

void check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(dim));
}

void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(what) + " " + std::to_string(x)
                                    + " outside [0,1]");
}

}  // namespace

PointSet::PointSet(int dim, std::vector<double> flat) : dim_(dim) {
    check_dim(dim);
    if (flat.size() % static_cast<std::size_t>(dim) != 0)
        throw std::invalid_argument("flat coordinate array length " + std::to_string(flat.size())
                                    + " is not a multiple of dim " + std::to_string(dim));
    n_ = flat.size() / static_cast<std::size_t>(dim);
    cols_.assign(static_cast<std::size_t>(dim), {});
    for (auto& c : cols_) c.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (int k = 0; k < dim; ++k) {
            double x = flat[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)];
            check_unit(x, "coordinate");
            cols_[static_cast<std::size_t>(k)][i] = x;
        }
    }
}

std::vector<double> PointSet::point(std::size_t i) const {
    std::vector<double> p(static_cast<std::size_t>(dim_));
    for (int k = 0; k < dim_; ++k) p[static_cast<std::size_t>(k)] = cols_[static_cast<std::size_t>(k)][i];
    return p;
}

std::vector<double> PointSet::flat() const {
    std::vector<double> out(n_ * static_cast<std::size_t>(dim_));
    for (std::size_t i = 0; i < n_; ++i)
        for (int k = 0; k < dim_; ++k)
            out[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(k)] = cols_[static_cast<std::size_t>(k)][i];
    return out;
}

AxisBox::AxisBox(std::vector<double> lo_in, std::vector<double> hi_in)
    : lo(std::move(lo_in)), hi(std::move(hi_in)) {
    if (lo.size() != hi.size()) throw std::invalid_argument("box lo/hi dimension mismatch");
    check_dim(static_cast<int>(lo.size()));
    for (std::size_t k = 0; k < lo.size(); ++k) {
        check_unit(lo[k], "box endpoint");
        check_unit(hi[k], "box endpoint");
        if (!(lo[k] <= hi[k]))
            throw std::invalid_argument("box has lo > hi in dimension " + std::to_string(k + 1));
    }
}

AxisBox AxisBox::unit(int dim) {
    check_dim(dim);
    return AxisBox(std::vector<double>(static_cast<std::size_t>(dim), 0.0),
                   std::vector<double>(static_cast<std::size_t>(dim), 1.0));
}

double AxisBox::volume() const {
    double v = 1.0;
    for (std::size_t k = 0; k < lo.size(); ++k) v *= hi[k] - lo[k];
    return v;
}

PeriodicBox::PeriodicBox(std::vector<double> a_in, std::vector<double> b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
    if (a.size() != b.size()) throw std::invalid_argument("arc endpoint dimension mismatch");
    check_dim(static_cast<int>(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        check_unit(a[k], "arc endpoint");
        check_unit(b[k], "arc endpoint");
    }
}

double PeriodicBox::arc_length(int k) const {
    auto i = static_cast<std::size_t>(k);
    return a[i] < b[i] ? b[i] - a[i] : 1.0 - (a[i] - b[i]);
}

double PeriodicBox::volume() const {
    double v = 1.0;
    for (int k = 0; k < dim(); ++k) v *= arc_length(k);
    return v;
}

CertifiedValue::CertifiedValue(double lower_in, double upper_in)
    : lower(lower_in), upper(upper_in) {
    if (!(0.0 <= lower && lower <= upper && upper <= 1.0))
        throw std::invalid_argument("certified interval must satisfy 0 <= lower <= upper <= 1");
}

bool box_is_empty(const AxisBox& box, const PointSet& points) {
    if (box.dim() != points.dim())
        throw std::invalid_argument("box/point set dimension mismatch");
    std::vector<std::span<const double>> cols(static_cast<std::size_t>(points.dim()));
    for (int k = 0; k < points.dim(); ++k) cols[static_cast<std::size_t>(k)] = points.column(k);
    return !kernels::any_point_in_open_box(cols, box.lo, box.hi);
}

bool periodic_box_is_empty(const PeriodicBox& box, const PointSet& points) {
    if (box.dim() != points.dim())
        throw std::invalid_argument("box/point set dimension mismatch");
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool inside = true;
        for (int k = 0; k < points.dim(); ++k) {
            auto ku = static_cast<std::size_t>(k);
            double x = points.coord(i, k);
            if (x == 1.0) x = 0.0;  // torus identification
            if (!in_arc(x, box.a[ku], box.b[ku])) {
                inside = false;
                break;
            }
        }
        if (inside) return false;
    }
    return true;
}

}  // namespace disp
