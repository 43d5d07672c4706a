#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "csiloc/core/errors.hpp"

namespace csiloc {

/// Deterministic CSV emitter: UTF-8, comma-separated, mandatory header row,
/// "%.9g" float formatting so identical runs produce identical bytes.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : n_cols_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) buf_ += ',';
      buf_ += header[i];
    }
    buf_ += '\n';
  }

  CsvWriter& cell(const std::string& s) {
    sep();
    buf_ += s;
    return *this;
  }
  CsvWriter& cell(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof(tmp), "%.9g", v);
    return cell(std::string(tmp));
  }
  CsvWriter& cell(int64_t v) { return cell(std::to_string(v)); }
  CsvWriter& cell(int v) { return cell(std::to_string(v)); }
  CsvWriter& cell(uint64_t v) { return cell(std::to_string(v)); }

  void end_row() {
    if (col_ != n_cols_)
      throw DomainError("csv row has " + std::to_string(col_) + " cells, expected " +
                        std::to_string(n_cols_));
    buf_ += '\n';
    col_ = 0;
  }

  const std::string& str() const { return buf_; }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write csv: " + path);
    out << buf_;
  }

 private:
  void sep() {
    if (col_ >= n_cols_) throw DomainError("csv row overflow");
    if (col_) buf_ += ',';
    ++col_;
  }

  std::string buf_;
  size_t n_cols_;
  size_t col_ = 0;
};

}  // namespace csiloc
