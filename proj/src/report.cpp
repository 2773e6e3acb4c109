#include "dseries/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dseries {

void RunRecord::attach_oracle(double o, std::optional<double> tail) {
    oracle_value = o;
    oracle_tail = tail;
    rel_diff = dseries::rel_diff(value, o);
}

double rel_diff(double value, double reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "plain") return Format::plain;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_number(double v, Format f) {
    if (std::isnan(v)) return f == Format::json ? "null" : "nan";
    if (std::isinf(v)) return f == Format::json ? "null" : (v > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", f == Format::plain ? 12 : 17, v);
    return buf;
}

const std::vector<std::string>& run_record_fields() {
    static const std::vector<std::string> f = {"op_name",      "params",      "value",    "est_abs_error",
                                               "oracle_value", "oracle_tail", "rel_diff", "elapsed_ns"};
    return f;
}

std::vector<Cell> to_cells(const RunRecord& r, bool timing) {
    auto opt = [](const std::optional<double>& v) -> Cell {
        if (v) return *v;
        return std::monostate{};
    };
    return {r.op_name,          r.params,      r.value,     r.est_abs_error, opt(r.oracle_value),
            opt(r.oracle_tail), opt(r.rel_diff), timing ? r.elapsed_ns : std::int64_t{0}};
}

namespace {

std::string param_text(const ParamValue& v, Format f) {
    if (const auto* d = std::get_if<double>(&v)) return format_number(*d, f);
    return std::get<std::string>(v);
}

std::string json_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "null";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_number(v, Format::json);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return nlohmann::json(v).dump();
            } else {
                std::string out = "{";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += ",";
                    out += nlohmann::json(v[i].first).dump() + ":";
                    if (const auto* d = std::get_if<double>(&v[i].second))
                        out += format_number(*d, Format::json);
                    else
                        out += nlohmann::json(std::get<std::string>(v[i].second)).dump();
                }
                return out + "}";
            }
        },
        c);
}

std::string text_cell(const Cell& c, Format f) {
    return std::visit(
        [f](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_number(v, f);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                std::string out;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += ";";
                    out += v[i].first + "=" + param_text(v[i].second, f);
                }
                return out;
            }
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

void write_table(std::ostream& os, const Table& t, Format f) {
    switch (f) {
        case Format::json:
            for (const auto& row : t.rows) {
                os << '{';
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) os << ',';
                    os << nlohmann::json(t.header[i]).dump() << ':' << json_cell(row[i]);
                }
                os << "}\n";
            }
            break;
        case Format::csv:
            for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
            os << '\n';
            for (const auto& row : t.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(text_cell(row[i], f));
                os << '\n';
            }
            break;
        case Format::plain: {
            std::vector<std::vector<std::string>> cells;
            cells.push_back(t.header);
            for (const auto& row : t.rows) {
                std::vector<std::string> r;
                for (const auto& c : row) r.push_back(text_cell(c, f));
                cells.push_back(std::move(r));
            }
            std::vector<std::size_t> width(t.header.size(), 0);
            for (const auto& r : cells)
                for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
            for (const auto& r : cells) {
                std::string line;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    line += r[i];
                    if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
                }
                os << line << '\n';
            }
            break;
        }
    }
}

}  // namespace dseries
