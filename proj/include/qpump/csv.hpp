// csv.hpp — deterministic numeric formatting and small CSV helpers

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qpump::csv {

// 17 significant digits via std::to_chars: locale-free, shortest general form,
// round-trips any double exactly.
std::string format_double(double x);

std::vector<std::string> split_line(std::string_view line, char sep = ',');

double parse_double(std::string_view field);      // throws std::invalid_argument
std::size_t parse_index(std::string_view field);  // throws std::invalid_argument

// Removes a trailing '\r' so CRLF files parse like LF files
std::string_view strip_eol(std::string_view line);

}
