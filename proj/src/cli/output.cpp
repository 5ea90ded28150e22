#include "fluxqm/cli/output.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace fluxqm::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Comment lines must stay on one line.
std::string comment_safe(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
        nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
        nlohmann::ordered_json operator()(double d) const {
            if (std::isfinite(d)) return d;
            return nullptr;
        }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    out += "# schema_version: " + std::to_string(kSchemaVersion) + "\r\n";
    out += "# command: " + table.command + "\r\n";
    for (const auto& [key, value] : table.parameters) out += "# param " + key + " = " + comment_safe(value) + "\r\n";
    for (const auto& col : table.columns) out += "# column " + col.name + ": " + comment_safe(col.doc) + "\r\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_field(table.columns[i].name);
    }
    out += "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cell_text(row[i]));
        }
        out += "\r\n";
    }
    for (const auto& [key, value] : table.summary) out += "# summary " + key + " = " + comment_safe(cell_text(value)) + "\r\n";
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json meta;
    meta["schema_version"] = kSchemaVersion;
    meta["command"] = table.command;
    auto& params = meta["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.parameters) params[key] = value;
    auto& cols = meta["columns"] = nlohmann::ordered_json::array();
    for (const auto& col : table.columns) cols.push_back({{"name", col.name}, {"doc", col.doc}});
    auto& summary = meta["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.summary) summary[key] = cell_json(value);

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
            obj[table.columns[i].name] = cell_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    nlohmann::ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace fluxqm::cli
