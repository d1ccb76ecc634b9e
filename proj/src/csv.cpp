#include "jcsim/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace jcsim {

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

std::string quoted(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& preamble,
                     const std::vector<std::string>& columns)
    : os_(os), ncols_(columns.size()) {
  for (const auto& line : preamble) os_ << "# " << line << "\r\n";
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != ncols_ && ncols_ != 0)
    throw std::logic_error("CsvWriter: wrong number of cells");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    os_ << quoted(cells[i]);
  }
  os_ << "\r\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format(v));
  row(cells);
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace jcsim
