#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace unirank::csv {

/// A parsed CSV file: header plus data rows, with the 1-based source line of
/// every row kept for error reporting.
struct Table {
  std::filesystem::path path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;

  /// Index of `name` in the header, or npos.
  std::size_t column(std::string_view name) const noexcept;
};

/// RFC 4180-ish reader: comma separated, double-quote quoting with "" escape,
/// optional UTF-8 BOM, LF or CRLF line ends. Throws ValidationError on
/// unterminated quotes or a missing header.
Table read(const std::filesystem::path& path);
Table parse(std::string_view text, const std::filesystem::path& origin = {});

/// Quote a field only when it needs it.
std::string escape(std::string_view field);

/// Writes one row terminated by '\n'.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest round-trip decimal representation of `value`.
std::string format_double(double value);

/// Fixed-point rendering with `decimals` digits, used for report display.
std::string format_fixed(double value, int decimals);

}  // namespace unirank::csv
