#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "netgrowth/errors.hpp"

namespace netgrowth {

enum class OutputFormat { table, csv, json };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ParseError("unknown format '" + name + "' (expected table, csv or json)");
}

// Number formatting used by every command: significant digits, never
// locale-dependent.
inline std::string format_number(double value, int digits = 4) {
    digits = std::clamp(digits, 1, 17);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
}

// All command output goes through this one shape: named columns over rows of
// already-formatted cells. Keeping cells as strings makes the CSV and JSON
// renderings canonical, so parse + re-emit is byte-identical.
struct TextTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    TextTable() = default;
    explicit TextTable(std::vector<std::string> columns_) : columns(std::move(columns_)) {}

    void add_row(std::vector<std::string> cells) {
        if (cells.size() != columns.size()) {
            throw ValidationError("table row width does not match column count");
        }
        rows.push_back(std::move(cells));
    }

    friend bool operator==(const TextTable& a, const TextTable& b) {
        return a.columns == b.columns && a.rows == b.rows;
    }
};

namespace detail {

inline std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

inline std::string render_csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += csv_escape(cells[i]);
    }
    out.push_back('\n');
    return out;
}

} // namespace detail

inline std::string render_csv(const TextTable& table) {
    std::string out = detail::render_csv_row(table.columns);
    for (const auto& row : table.rows) {
        out += detail::render_csv_row(row);
    }
    return out;
}

inline std::string render_json(const TextTable& table) {
    nlohmann::json doc;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

inline std::string render_aligned(const TextTable& table) {
    std::vector<std::size_t> widths(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        widths[c] = table.columns[c].size();
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    auto emit_row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            line += cells[c];
            if (c + 1 < cells.size()) {
                line.append(widths[c] - cells[c].size() + 2, ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        return line + "\n";
    };
    std::string out = emit_row(table.columns);
    std::string rule;
    for (std::size_t c = 0; c < widths.size(); ++c) {
        rule.append(widths[c], '-');
        if (c + 1 < widths.size()) {
            rule.append(2, ' ');
        }
    }
    out += rule + "\n";
    for (const auto& row : table.rows) {
        out += emit_row(row);
    }
    return out;
}

inline std::string render(const TextTable& table, OutputFormat format) {
    switch (format) {
    case OutputFormat::csv:
        return render_csv(table);
    case OutputFormat::json:
        return render_json(table);
    case OutputFormat::table:
    default:
        return render_aligned(table);
    }
}

// RFC-4180 style CSV reader for the subset render_csv emits.
inline TextTable parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> current;
    std::string cell;
    bool quoted = false;
    bool cell_started = false;
    std::size_t i = 0;
    auto end_cell = [&] {
        current.push_back(cell);
        cell.clear();
        cell_started = false;
    };
    auto end_record = [&] {
        end_cell();
        records.push_back(current);
        current.clear();
    };
    while (i < text.size()) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell.push_back(c);
            }
        } else if (c == '"' && !cell_started) {
            quoted = true;
            cell_started = true;
        } else if (c == ',') {
            end_cell();
        } else if (c == '\n') {
            end_record();
        } else if (c != '\r') {
            cell.push_back(c);
            cell_started = true;
        }
        ++i;
    }
    if (quoted) {
        throw ParseError("csv: unterminated quoted cell");
    }
    if (cell_started || !current.empty()) {
        end_record();
    }
    if (records.empty()) {
        throw ParseError("csv: empty input");
    }
    TextTable table(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.columns.size()) {
            throw ParseError("csv: row " + std::to_string(r + 1) + " has wrong width");
        }
        table.rows.push_back(records[r]);
    }
    return table;
}

inline TextTable parse_json_table(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("columns") || !doc.contains("rows")) {
        throw ParseError("json: expected an object with 'columns' and 'rows'");
    }
    TextTable table(doc["columns"].get<std::vector<std::string>>());
    for (const auto& row : doc["rows"]) {
        table.add_row(row.get<std::vector<std::string>>());
    }
    return table;
}

} // namespace netgrowth
