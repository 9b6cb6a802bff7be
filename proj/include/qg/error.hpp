#ifndef QG_ERROR_HPP
#define QG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qg {

// Base class for all domain errors; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
  DegreeMismatch(unsigned a, unsigned b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class RowNotPermutation : public Error {
public:
  explicit RowNotPermutation(unsigned row)
      : Error("row " + std::to_string(row) + " is not a permutation"), row_(row) {}
  unsigned row() const { return row_; }

private:
  unsigned row_;
};

class ColumnNotPermutation : public Error {
public:
  explicit ColumnNotPermutation(unsigned col)
      : Error("column " + std::to_string(col) + " is not a permutation"), col_(col) {}
  unsigned column() const { return col_; }

private:
  unsigned col_;
};

class SizeMismatch : public Error {
public:
  using Error::Error;
};

class SearchBoundExceeded : public Error {
public:
  explicit SearchBoundExceeded(unsigned n, unsigned bound)
      : Error("order " + std::to_string(n) + " exceeds search bound " + std::to_string(bound)) {}
};

class NotALoop : public Error {
public:
  NotALoop() : Error("quasigroup has no two-sided identity") {}
};

class EpsilonPosition : public Error {
public:
  EpsilonPosition() : Error("requested component is the nucleus' identity position") {}
};

class UnsupportedShape : public Error {
public:
  using Error::Error;
};

class WitnessInvalid : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(unsigned line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
  explicit ParseError(const std::string& reason) : Error("parse error: " + reason), line_(0) {}
  unsigned line() const { return line_; }

private:
  unsigned line_;
};

}  // namespace qg

#endif
