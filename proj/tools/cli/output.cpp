#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace photon_scatter::cli {

Column& Table::add(std::string header, std::string key) {
    columns.push_back({std::move(header), std::move(key), {}});
    return columns.back();
}

std::size_t Table::rows() const { return columns.empty() ? 0 : columns.front().values.size(); }

std::string format_number(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of −0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

namespace {

nlohmann::ordered_json json_number(double v, int precision) {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_number(v, precision));
}

void round_numbers(nlohmann::ordered_json& j, int precision) {
    if (j.is_number_float()) {
        j = json_number(j.get<double>(), precision);
    } else if (j.is_structured()) {
        for (auto& e : j) round_numbers(e, precision);
    }
}

}  // namespace

void write_table(std::ostream& os, const Table& t, const OutputOptions& o) {
    for (const auto& c : t.columns)
        if (c.values.size() != t.rows()) throw std::logic_error("ragged output table");

    if (o.format == Format::Csv) {
        for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j].header;
        os << '\n';
        for (std::size_t i = 0; i < t.rows(); ++i) {
            for (std::size_t j = 0; j < t.columns.size(); ++j)
                os << (j ? "," : "") << format_number(t.columns[j].values[i], o.precision);
            os << '\n';
        }
        return;
    }

    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& c : t.columns) {
        if (t.scalar) {
            out[c.key] = json_number(c.values.at(0), o.precision);
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (double v : c.values) arr.push_back(json_number(v, o.precision));
            out[c.key] = std::move(arr);
        }
    }
    for (auto it = t.extra.begin(); it != t.extra.end(); ++it) out[it.key()] = it.value();
    out["parameters"] = t.parameters;
    round_numbers(out, o.precision);
    os << out.dump() << '\n';
}

}  // namespace photon_scatter::cli
