#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbmod {

/// Operand dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The pair (A, B) violates AB - BA = B^2. Row and column are 1-based and
/// name the first failing entry in row-major order.
class ValidationError : public std::domain_error {
 public:
  ValidationError(std::size_t row, std::size_t col, const std::string& what)
      : std::domain_error(what), row_(row), col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// A last column for which the band recursion hits 1 + b_{j,j+1} = 0.
/// No module with this last column exists. Band and row are 1-based.
class DegenerateColumnError : public std::domain_error {
 public:
  DegenerateColumnError(std::size_t band, std::size_t row, const std::string& what)
      : std::domain_error(what), band_(band), row_(row) {}
  std::size_t band() const noexcept { return band_; }
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t band_;
  std::size_t row_;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would need eigenvalues outside the rationals.
class UnsupportedFieldExtension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Seeing this means a bug, or an input that
/// slipped past validation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text input did not parse. `column` is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t column, const std::string& what)
      : std::invalid_argument(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace rbmod
