#pragma once

#include <stdexcept>
#include <string>

namespace ginimds {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a precondition (non-finite values, size mismatch, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A parameter or configuration value is out of its admissible range.
class InvalidConfig : public Error {
public:
  using Error::Error;
};

/// Input is structurally valid but degenerate for the requested operation
/// (all-zero distance matrix, zero off-diagonal Sammon distance, ...).
class DegenerateInput : public Error {
public:
  using Error::Error;
};

/// A numerical routine failed to produce a result (eigensolver breakdown).
class NumericFailure : public Error {
public:
  using Error::Error;
};

/// CSV parse failure; carries the 1-based row/column of the offending cell.
class ParseError : public Error {
public:
  ParseError(const std::string& what, long row, long column)
      : Error("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}

  long row() const noexcept { return row_; }
  long column() const noexcept { return column_; }

private:
  long row_;
  long column_;
};

}  // namespace ginimds
