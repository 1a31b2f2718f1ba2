// Minimal CSV helpers: locale-independent number formatting and parsing.
// All output files use '\n' line endings and %.17g doubles so that runs
// with equal seeds produce byte-identical files.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcov::csv {

// Shortest round-trip decimal text for a double ("nan"/"inf" spelled out).
std::string format_double(double v);

std::string format_int(std::int64_t v);

// Splits one CSV line on commas. No quoting support; none of our formats
// need it.
std::vector<std::string> split(const std::string& line);

// Parses with std::from_chars; throws qcov::FormatError on garbage.
double parse_double(const std::string& field);
std::int64_t parse_int(const std::string& field);

// Reads a whole file into lines, dropping a trailing empty line.
std::vector<std::string> read_lines(const std::string& path);

}  // namespace qcov::csv
