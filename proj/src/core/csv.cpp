#include "core/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "core/errors.hpp"

namespace tendex {

namespace fs = std::filesystem;

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    // from_chars rejects a leading '+', which some CSV exporters emit
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw Error(Status::Parse, "ParseError: not a number: \"" + text + "\"");
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

TimeSeries read_series(const CsvSpec& spec) {
    std::ifstream in(spec.path, std::ios::binary);
    if (!in)
        throw Error(Status::Io, "FileNotFound: cannot open \"" + spec.path + "\"");

    TimeSeries out;
    out.label = spec.column.empty() ? fs::path(spec.path).stem().string() : spec.column;

    std::string line;
    std::size_t line_no = 0;
    long column = spec.column.empty() ? spec.column_index : -1;
    bool header_pending = spec.header;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line, spec.delimiter);
        if (header_pending) {
            header_pending = false;
            if (!spec.column.empty()) {
                for (std::size_t c = 0; c < fields.size(); ++c)
                    if (fields[c] == spec.column) column = static_cast<long>(c);
                if (column < 0)
                    throw Error(Status::Parse, "ParseError: column \"" + spec.column +
                                                   "\" not found in header of \"" + spec.path +
                                                   "\"");
            }
            continue;
        }
        if (column < 0 || static_cast<std::size_t>(column) >= fields.size())
            throw Error(Status::Parse, "ParseError: line " + std::to_string(line_no) + " of \"" +
                                           spec.path + "\" has no column " +
                                           std::to_string(column));
        double value;
        try {
            value = parse_double(fields[static_cast<std::size_t>(column)]);
        } catch (const Error&) {
            throw Error(Status::Parse, "ParseError: line " + std::to_string(line_no) + " of \"" +
                                           spec.path + "\": cannot parse \"" +
                                           fields[static_cast<std::size_t>(column)] +
                                           "\" as a real number");
        }
        if (!std::isfinite(value))
            throw Error(Status::Parse, "NonFiniteValue: line " + std::to_string(line_no) +
                                           " of \"" + spec.path + "\" is not finite");
        out.values.push_back(value);
    }
    if (out.values.empty())
        throw Error(Status::Parse, "ParseError: \"" + spec.path + "\" contains no data rows");
    return out;
}

namespace {

void write_atomically(const fs::path& path, const std::string& contents) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(Status::Io, "IoError: cannot write \"" + tmp.string() + "\"");
        out << contents;
        if (!out.flush())
            throw Error(Status::Io, "IoError: short write to \"" + tmp.string() + "\"");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
        throw Error(Status::Io, "IoError: cannot rename \"" + tmp.string() + "\" to \"" +
                                    path.string() + "\": " + ec.message());
}

} // namespace

void write_csv(const fs::path& path, const std::vector<CsvColumn>& columns, bool with_index) {
    if (columns.empty())
        throw Error(Status::InvalidArgument, "IoError: no columns to write");
    const std::size_t rows = columns.front().values.size();
    for (const auto& col : columns)
        if (col.values.size() != rows)
            throw Error(Status::InvalidArgument, "LengthMismatch: ragged CSV columns");

    std::string body;
    if (with_index) body += "i";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (with_index || c > 0) body += ',';
        body += columns[c].name;
    }
    body += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        if (with_index) body += std::to_string(r);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (with_index || c > 0) body += ',';
            body += format_double(columns[c].values[r]);
        }
        body += '\n';
    }
    write_atomically(path, body);
}

void write_series_csv(const fs::path& path, const TimeSeries& series) {
    write_csv(path, {{"value", series.values}}, /*with_index=*/true);
}

} // namespace tendex
