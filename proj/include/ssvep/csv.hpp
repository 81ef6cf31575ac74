#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ssvep::csv {

// Splits on LF, dropping a trailing CR per line and trailing empty lines.
std::vector<std::string_view> lines(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

std::string_view trim(std::string_view s);

// Strict decimal parse of the whole field.
std::optional<double> parse_double(std::string_view field);

// %.<digits>g formatting; "-0" is normalised to "0".
std::string fmt(double value, int significant_digits = 10);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ssvep::csv
