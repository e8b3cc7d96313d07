#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzquant/temporal.hpp"

namespace fq::cli {

// A CSV file parsed onto one shared time axis. The time column holds either
// consecutive integers (the instants themselves) or uniformly spaced ISO
// dates (mapped to instants 0..N-1). Empty cells are flagged missing.
struct CsvTable {
    TimeAxis axis;
    std::vector<std::string> columns;  // value columns, file order
    std::map<std::string, RawSeries> series;

    const RawSeries& at(const std::string& name) const;
    bool has(const std::string& name) const { return series.count(name) != 0; }
};

// `time_column` empty selects the first header column.
CsvTable load_csv(const std::string& path, const std::string& time_column = "");

CsvTable parse_csv(const std::string& content, const std::string& time_column = "",
                   const std::string& origin = "<csv>");

}  // namespace fq::cli
