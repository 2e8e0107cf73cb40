#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scalecast::csv {

// One parsed CSV table: header row plus data rows. Fields are unescaped.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, or nullopt when absent.
    std::optional<std::size_t> column(const std::string& name) const;
};

// Parses RFC-4180-style CSV: comma separated, optional double-quote
// quoting with "" escapes, \n or \r\n row ends. Throws DataError on
// unterminated quotes or a missing header row.
Table read(std::istream& in);

// Field-level escaping; quotes only when the value needs it.
std::string escape_field(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Strict double parse of a whole field; nullopt on failure or non-finite.
std::optional<double> parse_double(const std::string& field);

// Strict integer parse of a whole field; nullopt on failure.
std::optional<long long> parse_int(const std::string& field);

}  // namespace scalecast::csv
