#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

namespace fssrank {

// Minimal strict CSV: comma-separated, optional double-quoted fields,
// UTF-8, one header row. Enough for the flat row-oriented schemas this
// project reads and writes.

std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_escape(const std::string& field);

// Shortest round-trip decimal form, '.' separator, locale-independent.
std::string format_double(double value);
// Fixed-point with the given number of fractional digits (round-to-nearest,
// ties resolved by the binary representation).
std::string format_fixed(double value, int digits);

class CsvReader {
  public:
    // Throws IoError if the file cannot be opened, MalformedRowError if the
    // header does not match `expected_header` exactly.
    CsvReader(const std::string& path, const std::vector<std::string>& expected_header);

    // Advances to the next data row; false at end of file.
    bool next_row();

    const std::vector<std::string>& fields() const { return fields_; }
    std::size_t line_number() const { return line_number_; }
    const std::string& path() const { return path_; }

    const std::string& str(std::size_t col) const;
    long long integer(std::size_t col) const;
    double decimal(std::size_t col) const;

    [[noreturn]] void fail(const std::string& message) const;

  private:
    std::string path_;
    std::ifstream in_;
    std::vector<std::string> fields_;
    std::size_t n_columns_ = 0;
    std::size_t line_number_ = 0;
};

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    void write_row(const std::vector<std::string>& fields);
    void close();

  private:
    std::string path_;
    std::ofstream out_;
    std::size_t n_columns_ = 0;
};

}  // namespace fssrank
