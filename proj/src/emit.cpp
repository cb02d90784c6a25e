#include "qzeno/emit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace qzeno::cli {

namespace {

std::string cell_to_string(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<long long>(&cell)) return *i;
    return std::get<std::string>(cell);
}

Cell cell_from_string(const std::string& s) {
    if (s.empty()) return s;
    long long iv = 0;
    auto ir = std::from_chars(s.data(), s.data() + s.size(), iv);
    if (ir.ec == std::errc{} && ir.ptr == s.data() + s.size()) return iv;
    double dv = 0.0;
    auto dr = std::from_chars(s.data(), s.data() + s.size(), dv);
    if (dr.ec == std::errc{} && dr.ptr == s.data() + s.size()) return dv;
    return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::string write_csv(const Table& table) {
    std::string out;
    for (const auto& [key, value] : table.metadata) {
        out += "# " + key + " = " + value + "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string write_json(const Table& table) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) meta[key] = value;
    doc["metadata"] = std::move(meta);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_to_json(row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

Table parse_csv(const std::string& text) {
    Table table;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find(" = ");
            if (eq == std::string::npos) throw std::runtime_error("parse_csv: bad metadata line");
            table.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 3));
            continue;
        }
        if (!have_header) {
            table.columns = split(line, ',');
            have_header = true;
            continue;
        }
        std::vector<Cell> row;
        for (const auto& field : split(line, ',')) row.push_back(cell_from_string(field));
        if (row.size() != table.columns.size())
            throw std::runtime_error("parse_csv: row width mismatch");
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::runtime_error("parse_csv: missing header row");
    return table;
}

Table parse_json(const std::string& text) {
    Table table;
    const auto doc = nlohmann::ordered_json::parse(text);
    for (const auto& [key, value] : doc.at("metadata").items())
        table.metadata.emplace_back(key, value.get<std::string>());
    for (const auto& row : doc.at("rows")) {
        if (table.columns.empty())
            for (const auto& [key, value] : row.items()) table.columns.push_back(key);
        std::vector<Cell> cells;
        for (const auto& [key, value] : row.items()) {
            if (value.is_number_float())
                cells.emplace_back(value.get<double>());
            else if (value.is_number_integer())
                cells.emplace_back(value.get<long long>());
            else
                cells.emplace_back(value.get<std::string>());
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

}  // namespace qzeno::cli
