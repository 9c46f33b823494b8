// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "disp/geometry.hpp"

// CSV exchange format: one point per row, one coordinate per column, optional
// header row (any row whose fields do not all parse as numbers). A file that
// is empty or header-only yields an empty point set whose dimension is the
// header's column count.

namespace disp {

PointSet load_pointset_csv(std::istream& in);
PointSet load_pointset_csv_file(const std::string& path);

// Writes a "x1,...,xd" header followed by one row per point, full precision.
void write_pointset_csv(std::ostream& out, const PointSet& points);
void write_pointset_csv_file(const std::string& path, const PointSet& points);

}  // namespace disp
