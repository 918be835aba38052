#include "fssrank/csv.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

#include "fssrank/errors.hpp"

namespace fssrank {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    out.push_back(std::move(field));
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    std::string s(buf, ptr);
    // Keep whole numbers recognizable as decimals.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string format_fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

CsvReader::CsvReader(const std::string& path, const std::vector<std::string>& expected_header)
    : path_(path), in_(path) {
    if (!in_) throw IoError("cannot open '" + path + "' for reading");
    std::string header_line;
    if (!std::getline(in_, header_line)) {
        throw MalformedRowError(path_, 1, "missing header row");
    }
    if (!header_line.empty() && header_line.back() == '\r') header_line.pop_back();
    line_number_ = 1;
    const auto header = split_csv_line(header_line);
    if (header != expected_header) {
        std::string expected;
        for (std::size_t i = 0; i < expected_header.size(); ++i) {
            if (i) expected += ',';
            expected += expected_header[i];
        }
        throw MalformedRowError(path_, 1, "header mismatch, expected '" + expected + "'");
    }
    n_columns_ = expected_header.size();
}

bool CsvReader::next_row() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fields_ = split_csv_line(line);
        if (fields_.size() != n_columns_) {
            fail("expected " + std::to_string(n_columns_) + " columns, found " +
                 std::to_string(fields_.size()));
        }
        return true;
    }
    return false;
}

const std::string& CsvReader::str(std::size_t col) const { return fields_.at(col); }

long long CsvReader::integer(std::size_t col) const {
    const std::string& s = fields_.at(col);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        fail("column " + std::to_string(col + 1) + ": '" + s + "' is not an integer");
    }
    return value;
}

double CsvReader::decimal(std::size_t col) const {
    const std::string& s = fields_.at(col);
    double value = 0.0;
    // from_chars is locale-independent; '.' is the only separator accepted.
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        fail("column " + std::to_string(col + 1) + ": '" + s + "' is not a decimal");
    }
    return value;
}

void CsvReader::fail(const std::string& message) const {
    throw MalformedRowError(path_, line_number_, message);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot open '" + path + "' for writing");
    n_columns_ = header.size();
    write_row(header);
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
    if (fields.size() != n_columns_) {
        throw std::logic_error("csv row width mismatch writing '" + path_ + "'");
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << csv_escape(fields[i]);
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.close();
    if (!out_) throw IoError("failed writing '" + path_ + "'");
}

}  // namespace fssrank
