#include "eosvac/output.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include "eosvac/errors.hpp"

namespace eosvac::output {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

CsvDocument::CsvDocument(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvDocument::meta(std::string_view key, std::string_view value) {
  meta_ += "# ";
  meta_ += key;
  meta_ += '=';
  meta_ += value;
  meta_ += '\n';
}

void CsvDocument::meta(std::string_view key, double value) { meta(key, format_double(value)); }

void CsvDocument::row(std::initializer_list<double> values) {
  row(std::vector<double>(values));
}

void CsvDocument::row(const std::vector<double>& values) {
  bool first = true;
  for (double v : values) {
    if (!first) body_ += ',';
    body_ += format_double(v);
    first = false;
  }
  body_ += '\n';
  ++rows_;
}

void CsvDocument::row(long long index, std::initializer_list<double> values) {
  body_ += std::to_string(index);
  for (double v : values) {
    body_ += ',';
    body_ += format_double(v);
  }
  body_ += '\n';
  ++rows_;
}

std::string CsvDocument::str() const {
  std::string out = meta_;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  out += body_;
  return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

void stamp(CsvDocument& doc, std::string_view command, const nlohmann::json& config,
           std::string_view hash) {
  doc.meta("generator", "eosvac");
  doc.meta("command", command);
  doc.meta("config_hash", hash);
  doc.meta("config", config.dump());
}

}  // namespace eosvac::output
