#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcaim {

/// Quotes a CSV cell when it contains a comma, quote, or line break.
std::string csv_escape(const std::string& cell);
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);
/// RFC 4180 reader. Blank lines are skipped; a trailing newline is optional.
std::vector<std::vector<std::string>> read_csv_table(std::istream& in);

/// Whole-file read; throws input_error when the file cannot be opened.
std::string read_file(const std::string& path, const std::string& what = "file");

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// run never leaves a partial output behind.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace fcaim
