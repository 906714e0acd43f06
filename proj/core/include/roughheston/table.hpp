#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace roughheston {

using Cell = std::variant<double, std::string>;

// Column-labelled rows for CSV/JSON export.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);
    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

// 12 significant digits; +inf as "inf". NaN is a programming error (std::logic_error).
std::string format_number(double v);

void write_csv(const Table& table, std::ostream& out);
// {"column": [values...], ...} in column order; infinities as the string "inf".
void write_json(const Table& table, std::ostream& out);

}  // namespace roughheston
