#include "knnad/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace knnad::io {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string& context) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && (*first == ' ' || *first == '\t')) {
    ++first;
  }
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc()) {
    throw std::runtime_error(context + ": cannot parse '" + std::string(text) +
                             "' as a number");
  }
  for (const char* p = res.ptr; p != last; ++p) {
    if (*p != ' ' && *p != '\t' && *p != '\r') {
      throw std::runtime_error(context + ": trailing characters in '" +
                               std::string(text) + "'");
    }
  }
  return v;
}

long long parse_int(std::string_view text, const std::string& context) {
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first != last && (*first == ' ' || *first == '\t')) {
    ++first;
  }
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc()) {
    throw std::runtime_error(context + ": cannot parse '" + std::string(text) +
                             "' as an integer");
  }
  for (const char* p = res.ptr; p != last; ++p) {
    if (*p != ' ' && *p != '\t' && *p != '\r') {
      throw std::runtime_error(context + ": trailing characters in '" +
                               std::string(text) + "'");
    }
  }
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  const std::string content = read_text(path);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t pos = content.find('\n', start);
    if (pos == std::string::npos) {
      pos = content.size();
    }
    std::size_t end = pos;
    if (end > start && content[end - 1] == '\r') {
      --end;
    }
    lines.emplace_back(content.substr(start, end - start));
    start = pos + 1;
  }
  return lines;
}

void atomic_write_text(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open file for writing: " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  atomic_write_text(path, j.dump(2) + "\n");
}

nlohmann::json read_json(const std::filesystem::path& path) {
  return nlohmann::json::parse(read_text(path));
}

}  // namespace knnad::io
