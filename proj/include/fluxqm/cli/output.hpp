#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fluxqm::cli {

inline constexpr int kSchemaVersion = 1;

/// One table cell; monostate is an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

struct Column {
    std::string name;
    std::string doc;
};

/// Result table of one run. `parameters` and `summary` are ordered key/value
/// records that land in the CSV comment block and the JSON meta object.
struct Table {
    std::string command;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, Cell>> summary;
};

/// Shortest decimal text that reads back to the same double; "nan", "inf",
/// "-inf" for non-finite values.
std::string format_double(double v);

std::string cell_text(const Cell& cell);

/// RFC-4180 CSV (CRLF line ends) preceded by '#' comment lines: schema
/// version, command, parameters and one line per column. Summary records
/// follow the data as '#' comment lines.
std::string to_csv(const Table& table);

/// {"meta": {...}, "rows": [{...}, ...]} with a trailing newline.
std::string to_json(const Table& table);

}  // namespace fluxqm::cli
