#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace asymbench::numio {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Strict full-token parses; `what` names the field in error messages.
double parse_double(std::string_view token, std::string_view what);
int parse_int(std::string_view token, std::string_view what);

std::vector<std::string_view> split(std::string_view line, char delim);

// Splits on LF, dropping a trailing CR per line and a trailing empty line.
std::vector<std::string_view> lines(std::string_view text);

}  // namespace asymbench::numio
