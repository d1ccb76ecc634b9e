#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jcsim {

// RFC-4180 CSV with CRLF rows and minimal quoting. Preamble lines are written
// as "# ..." comment rows ahead of the header so every file carries its
// provenance (version + resolved config).
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& preamble,
            const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);

  static std::string format(double v);

 private:
  std::ostream& os_;
  size_t ncols_;
};

}  // namespace jcsim
