#pragma once

#include <stdexcept>
#include <string>

namespace shrinkcy {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live on different named bases (or on the wrong basis for a form).
class BasisMismatchError : public Error {
 public:
  BasisMismatchError(const std::string& expected, const std::string& got)
      : Error("basis mismatch: expected '" + expected + "', got '" + got + "'"),
        expected_basis(expected),
        actual_basis(got) {}
  std::string expected_basis;
  std::string actual_basis;
};

// Structured input failed a consistency check (bad index, negative genus, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Text input could not be parsed. line/col are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line_no = 0, int col_no = 0)
      : Error(describe(what, line_no, col_no)), line(line_no), col(col_no) {}
  int line;
  int col;

 private:
  static std::string describe(const std::string& what, int line_no, int col_no) {
    std::string s = what;
    if (line_no > 0) s += " (line " + std::to_string(line_no) + ")";
    if (col_no > 0) s += " (col " + std::to_string(col_no) + ")";
    return s;
  }
};

}  // namespace shrinkcy
