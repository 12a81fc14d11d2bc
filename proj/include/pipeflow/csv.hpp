#pragma once

#include "pipeflow/model_output.hpp"
#include "pipeflow/signal.hpp"

#include <string>
#include <vector>

namespace pipeflow {

// Numeric table with named columns. Blank cells read back as NaN and NaN
// writes back as a blank cell.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;
};

// Values are written with 9 significant digits, enough for a bit-stable
// write/read/write round trip of simulation output.
std::string format_value(double v);

CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);

// Signal from two columns of a CSV file (default column names "t", "v").
Signal signal_from_csv(const std::string& path,
                       const std::string& time_column = "t",
                       const std::string& value_column = "v");

// Layout: t,Tm_out[,Tw_out][,Tm_probe_<z>...][,Tin_delayed].
void write_model_output(const std::string& path, const ModelOutput& out);
ModelOutput read_model_output(const std::string& path);

}  // namespace pipeflow
