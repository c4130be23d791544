#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace eosvac::output {

/// "%.16e": 17 significant digits, round-trips every double.
std::string format_double(double x);

/// Comma-separated table with '#'-prefixed metadata lines ahead of the header.
class CsvDocument {
 public:
  explicit CsvDocument(std::vector<std::string> columns);

  void meta(std::string_view key, std::string_view value);
  void meta(std::string_view key, double value);
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);
  /// Integer first column (e.g. an index) followed by doubles.
  void row(long long index, std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::string meta_;
  std::string body_;
  std::size_t rows_ = 0;
};

/// Writes to a sibling temp file and renames it over `path`. Throws IoError.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Standard metadata lines shared by every emitted file.
void stamp(CsvDocument& doc, std::string_view command, const nlohmann::json& config,
           std::string_view hash);

}  // namespace eosvac::output
