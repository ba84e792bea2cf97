#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace uflab {

using Cell = std::variant<int64_t, double, std::string>;

// Rectangular result table. Rates and other reals serialize with 6
// significant digits, counts as full integers; the header row is fixed per
// experiment so outputs diff cleanly.
struct Table {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
    int column(const std::string& name) const;  // -1 when absent
};

std::string format_cell(const Cell& cell);
std::string to_csv(const std::vector<Table>& tables);
std::string to_json(const std::vector<Table>& tables);

// Parses CSV produced by to_csv (used by the reproduction driver).
std::vector<Table> parse_csv(const std::string& text);

}  // namespace uflab
