// SPDX-License-Identifier: Apache-2.0
#include "disp/pointset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "disp/errors.hpp"

namespace disp {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

PointSet load_pointset_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    int dim = 0;
    std::vector<double> flat;
    bool saw_content = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);

        if (!saw_content) {
            saw_content = true;
            // Header row: any first row whose fields do not all parse as numbers.
            bool all_numeric = true;
            for (const auto& f : fields) {
                double v;
                if (!parse_double(f, v)) {
                    all_numeric = false;
                    break;
                }
            }
            dim = static_cast<int>(fields.size());
            if (!all_numeric) continue;  // header consumed, dimension fixed
        }

        if (static_cast<int>(fields.size()) != dim)
            throw ParseError(lineno, 0,
                             "expected " + std::to_string(dim) + " fields, got "
                                 + std::to_string(fields.size()));
        for (std::size_t c = 0; c < fields.size(); ++c) {
            double v;
            if (!parse_double(fields[c], v))
                throw ParseError(lineno, c + 1, "cannot parse '" + fields[c] + "' as a number");
            if (!(v >= 0.0 && v <= 1.0))
                throw ParseError(lineno, c + 1,
                                 "coordinate " + fields[c] + " outside [0,1]");
            flat.push_back(v);
        }
    }

    if (!saw_content) throw ParseError(0, 0, "empty input: no header or data rows");
    return PointSet(dim, std::move(flat));
}

PointSet load_pointset_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return load_pointset_csv(in);
}

void write_pointset_csv(std::ostream& out, const PointSet& points) {
    for (int k = 0; k < points.dim(); ++k) {
        if (k > 0) out << ',';
        out << 'x' << (k + 1);
    }
    out << '\n';
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (int k = 0; k < points.dim(); ++k) {
            if (k > 0) out << ',';
            out << format_double(points.coord(i, k));
        }
        out << '\n';
    }
}

void write_pointset_csv_file(const std::string& path, const PointSet& points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_pointset_csv(out, points);
}

}  // namespace disp
