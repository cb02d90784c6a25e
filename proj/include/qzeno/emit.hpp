#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qzeno::cli {

using Cell = std::variant<double, long long, std::string>;

/// Tabular output: a `#`-prefixed metadata preamble, a header row, then data
/// rows (CSV), or a {"metadata": ..., "rows": [...]} object (JSON).
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal representation that round-trips exactly.
std::string format_double(double v);

std::string write_csv(const Table& table);
std::string write_json(const Table& table);

/// Inverse of write_csv, used for round-trip verification. Numeric-looking
/// fields come back as doubles or integers, everything else as text.
Table parse_csv(const std::string& text);
Table parse_json(const std::string& text);

}  // namespace qzeno::cli
