#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpecalc {

enum class OutputFormat { pretty, csv };

inline constexpr int kDefaultDigits = 6;

// A numeric cell. NaN renders empty. fixed_decimals >= 0 pins the cell to that
// many decimals (printed-precision echo); otherwise the table's significant
// digit count applies.
struct Cell {
    double value = 0.0;
    int fixed_decimals = -1;

    Cell(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
    Cell(double v, int decimals) : value(v), fixed_decimals(decimals) {}

    static Cell missing();
};

// |cells[column] - expected| <= tolerance must hold before the table prints.
struct Check {
    std::size_t column = 0;
    double expected = 0.0;
    double tolerance = 0.0;
};

struct ReportRow {
    std::string tag;  // provenance: method or quantity name
    std::vector<Cell> cells;
    std::vector<Check> checks;
};

class ReportTable {
public:
    ReportTable(std::string title, std::vector<std::string> columns);

    // ArgumentError unless the row has exactly one cell per column and every
    // check refers to an existing column.
    void add_row(ReportRow row);
    void add_note(std::string key, std::string value);

    [[nodiscard]] const std::string& title() const noexcept { return title_; }
    [[nodiscard]] const std::vector<std::string>& columns() const noexcept { return columns_; }
    [[nodiscard]] const std::vector<ReportRow>& rows() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& notes() const noexcept {
        return notes_;
    }

    // Row lookup by tag; nullptr when absent.
    [[nodiscard]] const ReportRow* find(const std::string& tag) const;

    // Human-readable descriptions of every failing check; empty when all hold.
    [[nodiscard]] std::vector<std::string> failed_checks() const;

    // ArgumentError for digits outside [1, 17].
    void write(std::ostream& out, OutputFormat format, int digits = kDefaultDigits) const;

private:
    std::string title_;
    std::vector<std::string> columns_;
    std::vector<ReportRow> rows_;
    std::vector<std::pair<std::string, std::string>> notes_;
};

// Shortest correctly rounded rendering at `digits` significant digits
// (exact ties go to even).
std::string format_significant(double v, int digits);

// Fixed-point rendering at `decimals` places, same rounding.
std::string format_fixed(double v, int decimals);

// The double nearest to v rounded to `decimals` places.
double round_decimals(double v, int decimals);

}  // namespace mpecalc
