#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/series.hpp"

namespace tendex {

/// Where and how to read a value column from a CSV file. When `column` is
/// nonempty it names a header column; otherwise `column_index` selects a
/// 0-based position.
struct CsvSpec {
    std::string path;
    std::string column;
    int column_index = 0;
    bool header = true;
    char delimiter = ',';
};

/// Reads the selected column as a finite-real series, preserving row order.
/// Blank lines are ignored. Errors: FileNotFound, ParseError (with 1-based
/// line number), NonFiniteValue.
TimeSeries read_series(const CsvSpec& spec);

/// Shortest decimal formatting that round-trips the exact double.
std::string format_double(double value);

/// Exact inverse of format_double; throws ParseError on anything else.
double parse_double(const std::string& text);

/// Splits one CSV record honoring RFC-4180 quoting.
std::vector<std::string> split_csv_line(const std::string& line, char delimiter);

/// A named column for write_csv.
struct CsvColumn {
    std::string name;
    std::vector<double> values;
};

/// Writes columns with a header row and full-precision values, through a
/// temp file renamed into place. An optional integer index column "i" is
/// prepended when with_index is true.
void write_csv(const std::filesystem::path& path, const std::vector<CsvColumn>& columns,
               bool with_index);

/// Writes a series as (i, value) rows with header "i,value".
void write_series_csv(const std::filesystem::path& path, const TimeSeries& series);

} // namespace tendex
