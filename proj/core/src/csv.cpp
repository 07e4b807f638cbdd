#include "pdae/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string_view>

namespace pdae::csv {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::runtime_error("csv: missing column '" + name + "'");
}

Table read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");

  Table table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto cells = split(body);
    if (table.header.empty()) {
      for (auto c : cells) table.header.emplace_back(c);
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw std::runtime_error("csv: " + path + ":" + std::to_string(line_no) +
                               ": expected " + std::to_string(table.header.size()) +
                               " columns, got " + std::to_string(cells.size()));
    }
    std::vector<double> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto c = cells[i];
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), row[i]);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        throw std::runtime_error("csv: " + path + ":" + std::to_string(line_no) +
                                 ": not a number: '" + std::string(c) + "'");
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) throw std::runtime_error("csv: '" + path + "' is empty");
  return table;
}

std::string format(double x) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", x);
  return {buf, static_cast<std::size_t>(len)};
}

Writer::Writer(const std::string& path) : path_(path) {
  file_ = std::fopen(path.c_str(), "w");
  if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
}

Writer::~Writer() {
  if (file_) std::fclose(file_);
}

void Writer::row(const std::vector<double>& values, char sep) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text.push_back(sep);
    text += format(values[i]);
  }
  line(text);
}

void Writer::line(const std::string& text) {
  if (std::fputs(text.c_str(), file_) < 0 || std::fputc('\n', file_) == EOF) {
    throw std::runtime_error("write failed for '" + path_ + "'");
  }
}

void Writer::close() {
  if (!file_) return;
  const int rc = std::fclose(file_);
  file_ = nullptr;
  if (rc != 0) throw std::runtime_error("close failed for '" + path_ + "'");
}

}  // namespace pdae::csv
