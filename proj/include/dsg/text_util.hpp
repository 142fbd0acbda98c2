#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dsg {

/// ASCII-only lowercasing; bytes outside A-Z pass through untouched.
std::string to_lower(std::string_view text);

std::string_view trim(std::string_view text);

std::vector<std::string_view> split_tabs(std::string_view line);

/// Probabilities in artifacts are printed with fixed 9 decimals so that
/// dump -> load -> dump round-trips byte-identically.
std::string format_prob(double value);

/// Classifier scores: shortest reasonable form ("1.5", "-1", "2.25").
std::string format_score(double value);

/// Calls fn(line, line_number) for every line, 1-based; strips trailing \r.
void for_each_line(std::istream& in,
                   const std::function<void(std::string_view, std::size_t)>& fn);

/// Opens for reading, throwing InputError when the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);

/// Opens for writing, throwing InputError when the file cannot be created.
std::ofstream open_output(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace dsg
