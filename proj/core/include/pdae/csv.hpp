#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace pdae::csv {

/// Numeric CSV table: a header row followed by rows of doubles.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws std::runtime_error if absent.
  std::size_t column(const std::string& name) const;
};

/// Reads a comma-separated table whose first line is a header. Blank lines
/// and lines starting with '#' are skipped. Errors name the path and line.
Table read(const std::string& path);

/// Shortest round-trip text for a double ("%.17g").
std::string format(double x);

/// RAII wrapper over a FILE* opened for writing; throws with the path on
/// failure to open or to flush.
class Writer {
 public:
  explicit Writer(const std::string& path);
  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;
  ~Writer();

  void row(const std::vector<double>& values, char sep = ',');
  void line(const std::string& text);
  void close();

 private:
  std::string path_;
  std::FILE* file_ = nullptr;
};

}  // namespace pdae::csv
