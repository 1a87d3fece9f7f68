#include "mpecalc/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "mpecalc/error.hpp"

namespace mpecalc {

namespace {

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    std::array<char, 400> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
    return {buf.data(), res.ptr};
}

std::string render(const Cell& cell, int digits) {
    if (std::isnan(cell.value)) {
        return {};
    }
    if (cell.fixed_decimals >= 0) {
        return format_fixed(cell.value, cell.fixed_decimals);
    }
    return format_significant(cell.value, digits);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    q += '"';
    return q;
}

}  // namespace

Cell Cell::missing() { return Cell{std::numeric_limits<double>::quiet_NaN()}; }

std::string format_significant(double v, int digits) {
    return to_chars_string(v, std::chars_format::general, digits);
}

std::string format_fixed(double v, int decimals) {
    return to_chars_string(v, std::chars_format::fixed, decimals);
}

double round_decimals(double v, int decimals) {
    const std::string s = format_fixed(v, decimals);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

ReportTable::ReportTable(std::string title, std::vector<std::string> columns)
    : title_(std::move(title)), columns_(std::move(columns)) {}

void ReportTable::add_row(ReportRow row) {
    if (row.cells.size() != columns_.size()) {
        throw ArgumentError("row '" + row.tag + "' has " + std::to_string(row.cells.size()) +
                            " cells, table has " + std::to_string(columns_.size()) + " columns");
    }
    for (const Check& c : row.checks) {
        if (c.column >= columns_.size()) {
            throw ArgumentError("row '" + row.tag + "' checks a missing column");
        }
    }
    rows_.push_back(std::move(row));
}

void ReportTable::add_note(std::string key, std::string value) {
    notes_.emplace_back(std::move(key), std::move(value));
}

const ReportRow* ReportTable::find(const std::string& tag) const {
    const auto it = std::find_if(rows_.begin(), rows_.end(),
                                 [&](const ReportRow& r) { return r.tag == tag; });
    return it == rows_.end() ? nullptr : &*it;
}

std::vector<std::string> ReportTable::failed_checks() const {
    std::vector<std::string> failures;
    for (const ReportRow& row : rows_) {
        for (const Check& c : row.checks) {
            const double got = row.cells[c.column].value;
            const double diff = std::abs(got - c.expected);
            if (!(diff <= c.tolerance)) {
                failures.push_back(title_ + " / " + row.tag + " / " + columns_[c.column] +
                                   ": got " + format_significant(got, 17) + ", expected " +
                                   format_significant(c.expected, 17) + " +/- " +
                                   format_significant(c.tolerance, 3));
            }
        }
    }
    return failures;
}

void ReportTable::write(std::ostream& out, OutputFormat format, int digits) const {
    if (digits < 1 || digits > 17) {
        throw ArgumentError("digits must be in [1, 17], got " + std::to_string(digits));
    }

    std::vector<std::vector<std::string>> grid;
    grid.reserve(rows_.size() + 1);
    std::vector<std::string> header{"tag"};
    header.insert(header.end(), columns_.begin(), columns_.end());
    grid.push_back(std::move(header));
    for (const ReportRow& row : rows_) {
        std::vector<std::string> line{row.tag};
        for (const Cell& cell : row.cells) {
            line.push_back(render(cell, digits));
        }
        grid.push_back(std::move(line));
    }

    if (format == OutputFormat::csv) {
        out << "# " << title_ << '\n';
        for (const auto& [key, value] : notes_) {
            out << "# " << key << ": " << value << '\n';
        }
        for (const auto& line : grid) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                out << (i ? "," : "") << csv_field(line[i]);
            }
            out << '\n';
        }
        return;
    }

    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            width[i] = std::max(width[i], line[i].empty() ? 1 : line[i].size());
        }
    }
    out << title_ << '\n';
    for (const auto& [key, value] : notes_) {
        out << "  " << key << ": " << value << '\n';
    }
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            const std::string& text = line[i].empty() ? std::string("-") : line[i];
            const std::string pad(width[i] - text.size(), ' ');
            if (i == 0) {
                out << text << pad;
            } else {
                out << "  " << pad << text;
            }
        }
        out << '\n';
    }
}

}  // namespace mpecalc
