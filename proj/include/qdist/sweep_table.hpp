#pragma once

#include <string>
#include <vector>

namespace qdist {

/// Rectangular numeric table with named columns, rendered to CSV with 12
/// significant digits, '.' decimal separator, '\n' newlines, and the literal
/// token `inf` for infinite flags. NaN entries are rejected.
class SweepTable {
public:
    explicit SweepTable(std::vector<std::string> columns);

    void add_row(std::vector<double> row);

    std::size_t column_count() const { return columns_.size(); }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    double at(std::size_t row, std::size_t col) const {
        return rows_[row][col];
    }

    std::string to_csv() const;

    /// Locale-free shortest-form rendering at 12 significant digits; "inf"
    /// for the infinite flag.
    static std::string format_value(double v);

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace qdist
