#include "uflab/table.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace uflab {

int Table::column(const std::string& col) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == col) return static_cast<int>(i);
    return -1;
}

std::string format_cell(const Cell& cell) {
    if (std::holds_alternative<int64_t>(cell)) return std::to_string(std::get<int64_t>(cell));
    if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", std::get<double>(cell));
    return buf;
}

std::string to_csv(const std::vector<Table>& tables) {
    std::ostringstream out;
    bool first = true;
    for (const Table& t : tables) {
        if (!first) out << "\n";
        first = false;
        for (size_t i = 0; i < t.header.size(); ++i)
            out << (i ? "," : "") << t.header[i];
        out << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_cell(row[i]);
            out << "\n";
        }
    }
    return out.str();
}

std::string to_json(const std::vector<Table>& tables) {
    nlohmann::ordered_json doc;
    for (const Table& t : tables) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj;
            for (size_t i = 0; i < row.size(); ++i) {
                const Cell& c = row[i];
                if (std::holds_alternative<int64_t>(c))
                    obj[t.header[i]] = std::get<int64_t>(c);
                else if (std::holds_alternative<std::string>(c))
                    obj[t.header[i]] = std::get<std::string>(c);
                else
                    // serialized via the fixed 6-significant-digit text form
                    obj[t.header[i]] = format_cell(c);
            }
            rows.push_back(std::move(obj));
        }
        doc[t.name] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

std::vector<Table> parse_csv(const std::string& text) {
    std::vector<Table> tables;
    std::istringstream in(text);
    std::string line;
    bool expect_header = true;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(cur);
        return out;
    };
    while (std::getline(in, line)) {
        if (line.empty()) {
            expect_header = true;
            continue;
        }
        if (expect_header) {
            Table t;
            t.header = split(line);
            tables.push_back(std::move(t));
            expect_header = false;
            continue;
        }
        std::vector<Cell> row;
        for (const std::string& field : split(line)) row.push_back(field);
        tables.back().add_row(std::move(row));
    }
    return tables;
}

}  // namespace uflab
