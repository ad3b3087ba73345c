#pragma once

#include <deque>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace photon_scatter::cli {

/// One output column: CSV header with units, JSON key in snake_case.
struct Column {
    std::string header;
    std::string key;
    std::vector<double> values;
};

/// Result of one subcommand. `scalar` results carry exactly one row and are
/// written as flat JSON objects.
struct Table {
    std::deque<Column> columns;  // stable references across add()
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    bool scalar = false;

    Column& add(std::string header, std::string key);
    std::size_t rows() const;
};

enum class Format { Csv, Json };

struct OutputOptions {
    Format format = Format::Csv;
    int precision = 12;
};

std::string format_number(double v, int precision);

void write_table(std::ostream& os, const Table& t, const OutputOptions& o);

}  // namespace photon_scatter::cli
