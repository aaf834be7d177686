#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coauthor::io {

// Splits on every delimiter occurrence; no quoting.
std::vector<std::string_view> split(std::string_view line, char delimiter);

// Comma-separated fields with RFC 4180 double-quote escaping.
std::vector<std::string> split_csv(std::string_view line);
std::string csv_field(std::string_view value);

// Strips a trailing '\r' left by CRLF files.
std::string_view chomp(std::string_view line);

std::optional<long long> parse_integer(std::string_view text);
std::optional<double> parse_double(std::string_view text);

// Shortest representation that parses back to the same double.
std::string format_double(double value);
// printf-style "%.2E", e.g. 7.29E-04.
std::string format_scientific(double value);

std::string read_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and renames it over `path`, so
/// readers never observe a partially written output. Throws IoError.
void write_file_atomic(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& writer);

// SHA-256 of a file's bytes, lowercase hex.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace coauthor::io
