#include "pipeflow/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pipeflow {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

bool CsvTable::has_column(const std::string& name) const {
    return std::find(header.begin(), header.end(), name) != header.end();
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
        throw std::invalid_argument("missing CSV column: " + name);
    return columns[static_cast<std::size_t>(it - header.begin())];
}

std::string format_value(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV file: " + path);
    table.header = split_line(line);
    if (table.header.empty())
        throw std::runtime_error("CSV header is empty: " + path);
    table.columns.resize(table.header.size());
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != table.header.size())
            throw std::runtime_error(path + ": row " + std::to_string(row) +
                                     " has " + std::to_string(cells.size()) +
                                     " cells, expected " +
                                     std::to_string(table.header.size()));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].empty()) {
                table.columns[c].push_back(
                    std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(cells[c], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != cells[c].size())
                throw std::runtime_error(path + ": row " + std::to_string(row) +
                                         ": cannot parse \"" + cells[c] + "\"");
            table.columns[c].push_back(value);
        }
    }
    return table;
}

void write_csv(const std::string& path, const CsvTable& table) {
    if (table.header.size() != table.columns.size())
        throw std::invalid_argument("CSV header/column count mismatch");
    for (const auto& col : table.columns)
        if (col.size() != table.rows())
            throw std::invalid_argument("CSV columns differ in length");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    for (std::size_t c = 0; c < table.header.size(); ++c)
        out << (c ? "," : "") << table.header[c];
    out << "\n";
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << format_value(table.columns[c][r]);
        out << "\n";
    }
    if (!out) throw std::runtime_error("failed writing CSV file: " + path);
}

Signal signal_from_csv(const std::string& path, const std::string& time_column,
                       const std::string& value_column) {
    const CsvTable table = read_csv(path);
    return Signal::from_samples(table.column(time_column),
                                table.column(value_column));
}

void write_model_output(const std::string& path, const ModelOutput& out) {
    CsvTable table;
    table.header.push_back("t");
    table.columns.push_back(out.t);
    table.header.push_back("Tm_out");
    table.columns.push_back(out.tm_out);
    if (!out.tw_out.empty()) {
        table.header.push_back("Tw_out");
        table.columns.push_back(out.tw_out);
    }
    for (const auto& probe : out.probes) {
        char name[48];
        std::snprintf(name, sizeof(name), "Tm_probe_%g", probe.position);
        table.header.push_back(name);
        table.columns.push_back(probe.temperature);
    }
    if (!out.tin_delayed.empty()) {
        table.header.push_back("Tin_delayed");
        table.columns.push_back(out.tin_delayed);
    }
    write_csv(path, table);
}

ModelOutput read_model_output(const std::string& path) {
    const CsvTable table = read_csv(path);
    ModelOutput out;
    out.t = table.column("t");
    out.tm_out = table.column("Tm_out");
    if (table.has_column("Tw_out")) out.tw_out = table.column("Tw_out");
    if (table.has_column("Tin_delayed"))
        out.tin_delayed = table.column("Tin_delayed");
    const std::string prefix = "Tm_probe_";
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        const std::string& name = table.header[c];
        if (name.rfind(prefix, 0) != 0) continue;
        ProbeSeries probe;
        probe.position = std::stod(name.substr(prefix.size()));
        probe.temperature = table.columns[c];
        out.probes.push_back(std::move(probe));
    }
    return out;
}

}  // namespace pipeflow
