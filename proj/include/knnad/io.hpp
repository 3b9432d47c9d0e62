#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vendor_json.hpp"

namespace knnad::io {

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

double parse_double(std::string_view text, const std::string& context);
long long parse_int(std::string_view text, const std::string& context);

std::vector<std::string_view> split_fields(std::string_view line);

std::string read_text(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Writes to <path>.tmp first and renames into place, so readers never see a
/// partial file.
void atomic_write_text(const std::filesystem::path& path, std::string_view content);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace knnad::io
