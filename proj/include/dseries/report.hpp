// Run records and their json/csv/plain serializations.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dseries {

using ParamValue = std::variant<double, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct RunRecord {
    std::string op_name;
    Params params;
    double value = 0.0;
    double est_abs_error = 0.0;
    std::optional<double> oracle_value;
    std::optional<double> oracle_tail;
    std::optional<double> rel_diff;
    std::int64_t elapsed_ns = 0;

    /// Sets oracle_value, oracle_tail and rel_diff = |value - o| / max(1, |o|).
    void attach_oracle(double o, std::optional<double> tail);
};

double rel_diff(double value, double reference);

enum class Format { json, csv, plain };

Format parse_format(const std::string& name);  // throws std::invalid_argument

/// Column-oriented table: one header, rows of cells. Cells are preformatted
/// strings except numbers, which are formatted per output format.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, Params>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

const std::vector<std::string>& run_record_fields();
std::vector<Cell> to_cells(const RunRecord& r, bool timing);

/// json: one object per line; csv: header then rows; plain: aligned columns.
void write_table(std::ostream& os, const Table& t, Format f);

/// Number formatting: 17 significant digits for json/csv, 12 for plain.
std::string format_number(double v, Format f);

}  // namespace dseries
