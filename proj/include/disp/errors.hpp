// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace disp {

// Thrown by search routines when the configured work budget is exhausted.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t budget, std::uint64_t visited)
        : std::runtime_error("search budget exceeded: visited " + std::to_string(visited)
                             + " candidates, budget " + std::to_string(budget)),
          budget(budget),
          visited(visited) {}

    std::uint64_t budget;
    std::uint64_t visited;
};

// Thrown by the CSV loader; row/column are 1-based, column 0 means "whole row".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t row, std::size_t column, const std::string& what_arg)
        : std::runtime_error(format(row, column, what_arg)), row(row), column(column) {}

    std::size_t row;
    std::size_t column;

private:
    static std::string format(std::size_t row, std::size_t column, const std::string& msg) {
        std::string s = "row " + std::to_string(row);
        if (column > 0) s += ", column " + std::to_string(column);
        return s + ": " + msg;
    }
};

}  // namespace disp
