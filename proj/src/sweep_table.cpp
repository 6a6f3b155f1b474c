#include "qdist/sweep_table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace qdist {

SweepTable::SweepTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
    if (columns_.empty())
        throw std::invalid_argument("SweepTable requires at least one column");
    for (const auto& c : columns_)
        if (c.empty() || c.find(',') != std::string::npos ||
            c.find('\n') != std::string::npos)
            throw std::invalid_argument("SweepTable column names must be "
                                        "nonempty and free of ',' and newlines");
}

void SweepTable::add_row(std::vector<double> row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("SweepTable row width " +
                                    std::to_string(row.size()) +
                                    " != column count " +
                                    std::to_string(columns_.size()));
    for (double v : row)
        if (std::isnan(v))
            throw std::invalid_argument("SweepTable rejects NaN entries");
    rows_.push_back(std::move(row));
}

std::string SweepTable::format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 12);
    if (res.ec != std::errc())
        throw std::runtime_error("SweepTable: value formatting failed");
    return std::string(buf, res.ptr);
}

std::string SweepTable::to_csv() const {
    std::string out;
    out.reserve(16 * (rows_.size() + 1) * columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out.push_back(',');
        out += columns_[c];
    }
    out.push_back('\n');
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out.push_back(',');
            out += format_value(row[c]);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace qdist
