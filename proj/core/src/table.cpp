#include "roughheston/table.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace roughheston {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw std::logic_error("table row width does not match the header");
    rows_.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) throw std::logic_error("refusing to format NaN");
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // no negative zero in output
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    const auto& cols = table.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& row : table.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const auto* d = std::get_if<double>(&row[i]))
                out << format_number(*d);
            else
                out << std::get<std::string>(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    const auto& cols = table.columns();
    for (const auto& c : cols) doc[c] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const auto* d = std::get_if<double>(&row[i])) {
                const std::string s = format_number(*d);
                if (std::isinf(*d))
                    doc[cols[i]].push_back(s);
                else
                    doc[cols[i]].push_back(std::stod(s));
            } else {
                doc[cols[i]].push_back(std::get<std::string>(row[i]));
            }
        }
    }
    out << doc.dump(2) << '\n';
}

}  // namespace roughheston
