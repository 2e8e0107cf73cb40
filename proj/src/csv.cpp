#include "scalecast/csv.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>

#include "scalecast/errors.hpp"

namespace scalecast::csv {

std::optional<std::size_t> Table::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
}

namespace {

// Reads one logical CSV record (quotes may span raw lines).
// Returns false at end of input with no record.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == std::istream::traits_type::eof()) return false;

    std::string field;
    bool in_quotes = false;
    while (true) {
        if (c == std::istream::traits_type::eof()) {
            if (in_quotes) throw DataError("csv: unterminated quoted field");
            break;
        }
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            break;
        } else if (ch == '\r' && in.peek() == '\n') {
            in.get();
            break;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
    fields.push_back(std::move(field));
    return true;
}

}  // namespace

Table read(std::istream& in) {
    Table t;
    if (!read_record(in, t.header)) {
        throw DataError("csv: missing header row");
    }
    std::vector<std::string> fields;
    while (read_record(in, fields)) {
        // A lone trailing newline yields one empty field; skip such rows.
        if (fields.size() == 1 && fields[0].empty()) continue;
        t.rows.push_back(fields);
    }
    return t;
}

std::string escape_field(const std::string& field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        out << escape_field(fields[i]);
    }
    out.put('\n');
}

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::optional<double> parse_double(const std::string& field) {
    if (field.empty()) return std::nullopt;
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end != begin + field.size() || errno == ERANGE) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<long long> parse_int(const std::string& field) {
    if (field.empty()) return std::nullopt;
    long long v = 0;
    const auto res =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace scalecast::csv
