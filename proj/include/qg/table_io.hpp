#ifndef QG_TABLE_IO_HPP
#define QG_TABLE_IO_HPP

#include <iosfwd>
#include <string>

#include "qg/quasigroup.hpp"

namespace qg {

// Table file format: optional '#' comment lines, then a line holding n,
// then n lines of n whitespace-separated entries in 0..n-1 (row x holds
// x*y for y = 0..n-1).
Quasigroup parse_table(std::istream& in);
Quasigroup parse_table_file(const std::string& path);
Quasigroup parse_table_string(const std::string& text);

// Canonical form: "n\n" then the rows, single-space separated.  Parsing the
// printed form reproduces the table exactly.
std::string print_table(const Quasigroup& q);

}  // namespace qg

#endif
