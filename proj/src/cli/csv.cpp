#include "fuzzquant/cli/csv.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "fuzzquant/errors.hpp"

namespace fq::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

bool parse_int(const std::string& s, std::int64_t& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && !s.empty();
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && !s.empty();
}

bool parse_int_field(const std::string& s, std::size_t pos, std::size_t len, int& out) {
    const char* begin = s.data() + pos;
    const char* end = begin + len;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

// YYYY-MM-DD to days since the civil epoch; false when not an ISO date.
bool parse_iso_date(const std::string& s, std::int64_t& out) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    int y, m, d;
    if (!parse_int_field(s, 0, 4, y) || !parse_int_field(s, 5, 2, m) ||
        !parse_int_field(s, 8, 2, d))
        return false;
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                          std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) return false;
    out = std::chrono::sys_days(ymd).time_since_epoch().count();
    return true;
}

}  // namespace

const RawSeries& CsvTable::at(const std::string& name) const {
    const auto it = series.find(name);
    if (it == series.end()) throw ArgumentError("unknown series '" + name + "'");
    return it->second;
}

CsvTable parse_csv(const std::string& content, const std::string& time_column,
                   const std::string& origin) {
    std::vector<std::vector<std::string>> rows;
    {
        std::stringstream ss(content);
        std::string line;
        while (std::getline(ss, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (trim(line).empty()) continue;
            rows.push_back(split_fields(line));
        }
    }
    if (rows.size() < 2)
        throw DataError(origin + ": need a header row and at least one data row");

    const auto& header = rows[0];
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i].empty())
            throw DataError(origin + ": header column " + std::to_string(i + 1) + " is empty");
        for (std::size_t j = i + 1; j < header.size(); ++j)
            if (header[i] == header[j])
                throw DataError(origin + ": duplicate column '" + header[i] + "'");
    }

    std::size_t time_idx = 0;
    if (!time_column.empty()) {
        bool found = false;
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == time_column) {
                time_idx = i;
                found = true;
                break;
            }
        if (!found) throw ArgumentError(origin + ": no time column '" + time_column + "'");
    }

    const std::size_t n = rows.size() - 1;
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != header.size())
            throw DataError(origin + ": row " + std::to_string(r + 1) + " has " +
                            std::to_string(rows[r].size()) + " fields, expected " +
                            std::to_string(header.size()));

    // Time column: consecutive integers, or uniformly spaced ISO dates.
    std::vector<std::int64_t> times(n);
    bool dates = false;
    for (std::size_t r = 0; r < n; ++r) {
        const std::string& cell = rows[r + 1][time_idx];
        std::int64_t value = 0;
        if (parse_int(cell, value)) {
            if (r > 0 && dates)
                throw DataError(origin + ": row " + std::to_string(r + 2) +
                                ": mixed integer and date time values");
        } else if (parse_iso_date(cell, value)) {
            if (r > 0 && !dates)
                throw DataError(origin + ": row " + std::to_string(r + 2) +
                                ": mixed integer and date time values");
            dates = true;
        } else {
            throw DataError(origin + ": row " + std::to_string(r + 2) +
                            ": unparsable time value '" + cell + "'");
        }
        times[r] = value;
    }

    TimeAxis axis;
    axis.length = n;
    if (dates) {
        std::int64_t spacing = n > 1 ? times[1] - times[0] : 1;
        if (spacing < 1)
            throw DataError(origin + ": row 3: dates must increase");
        for (std::size_t r = 1; r < n; ++r)
            if (times[r] - times[r - 1] != spacing)
                throw DataError(origin + ": row " + std::to_string(r + 2) +
                                ": nonuniform date spacing (expected " +
                                std::to_string(spacing) + " days)");
        axis.start = 0;
        axis.unit = spacing == 1 ? "day" : std::to_string(spacing) + "day";
    } else {
        for (std::size_t r = 1; r < n; ++r)
            if (times[r] - times[r - 1] != 1)
                throw DataError(origin + ": row " + std::to_string(r + 2) +
                                ": time column must advance by exactly 1 (got " +
                                std::to_string(times[r] - times[r - 1]) + ")");
        axis.start = times[0];
        axis.unit = "step";
    }

    CsvTable table;
    table.axis = axis;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c == time_idx) continue;
        std::vector<double> values(n, 0.0);
        std::vector<bool> missing(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            const std::string& cell = rows[r + 1][c];
            if (cell.empty()) {
                missing[r] = true;
                continue;
            }
            double v = 0.0;
            if (!parse_double(cell, v))
                throw DataError(origin + ": row " + std::to_string(r + 2) +
                                ": unparsable value '" + cell + "' in column '" + header[c] +
                                "'");
            values[r] = v;
        }
        table.columns.push_back(header[c]);
        table.series.emplace(header[c], RawSeries(axis, std::move(values), std::move(missing)));
    }
    if (table.columns.empty())
        throw DataError(origin + ": no value columns besides the time column");
    return table;
}

CsvTable load_csv(const std::string& path, const std::string& time_column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open CSV file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), time_column, path);
}

}  // namespace fq::cli
