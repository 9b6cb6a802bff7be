#include "qg/table_io.hpp"

#include <fstream>
#include <sstream>

#include "qg/error.hpp"

namespace qg {

namespace {

// Reads the next data line, skipping blanks and '#' comments.
bool next_data_line(std::istream& in, std::string& line, unsigned& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Quasigroup parse_table(std::istream& in) {
  std::string line;
  unsigned lineno = 0;
  if (!next_data_line(in, line, lineno))
    throw ParseError(lineno, "missing order line");
  long n = 0;
  {
    std::istringstream hl(line);
    if (!(hl >> n) || n <= 0)
      throw ParseError(lineno, "order must be a positive integer");
    std::string rest;
    if (hl >> rest)
      throw ParseError(lineno, "unexpected text after order");
  }
  std::vector<std::vector<unsigned>> grid;
  for (long x = 0; x < n; ++x) {
    if (!next_data_line(in, line, lineno))
      throw ParseError(lineno, "expected " + std::to_string(n) + " rows, got " +
                                   std::to_string(x));
    std::istringstream rl(line);
    std::vector<unsigned> row;
    long v;
    while (rl >> v) {
      if (v < 0 || v >= n)
        throw ParseError(lineno, "entry " + std::to_string(v) + " out of range");
      row.push_back(static_cast<unsigned>(v));
    }
    if (!rl.eof())
      throw ParseError(lineno, "bad entry in row " + std::to_string(x));
    if (row.size() != static_cast<std::size_t>(n))
      throw ParseError(lineno, "row " + std::to_string(x) + " has " +
                                   std::to_string(row.size()) + " entries, expected " +
                                   std::to_string(n));
    grid.push_back(std::move(row));
  }
  return Quasigroup::validate(static_cast<unsigned>(n), grid);
}

Quasigroup parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  return parse_table(in);
}

Quasigroup parse_table_string(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

std::string print_table(const Quasigroup& q) {
  std::string out = std::to_string(q.order()) + "\n";
  for (unsigned x = 0; x < q.order(); ++x) {
    for (unsigned y = 0; y < q.order(); ++y) {
      if (y) out += ' ';
      out += std::to_string(q.at(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace qg
