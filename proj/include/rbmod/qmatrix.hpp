#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbmod/rational.hpp"

namespace rbmod {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<Vector>& rows);
  static QMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static QMatrix diagonal(const Vector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  QMatrix transpose() const;
  QMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QMatrix pow(unsigned e) const;
  bool is_zero() const;
  bool is_strictly_upper() const;
  bool is_upper() const;

  std::string to_string() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, QMatrix a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product; throws ShapeError unless a.cols() == b.rows().
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
/// a*b - b*a for square matrices of equal size.
QMatrix commutator(const QMatrix& a, const QMatrix& b);
Vector mat_vec(const QMatrix& m, std::span<const Rational> v);

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivot is the first nonzero entry at or below
/// the current row, scanning columns left to right.
RowEchelon rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);

/// Basis of {v : m v = 0}: one vector per free column, in column order.
std::vector<Vector> nullspace(const QMatrix& m);

struct LinearSolution {
  std::optional<Vector> particular;  // nullopt when inconsistent
  std::vector<Vector> kernel;
};

/// Particular solution (free variables set to 0) plus kernel basis.
LinearSolution solve_linear(const QMatrix& m, std::span<const Rational> rhs);

/// Throws SingularMatrixError if m is singular.
QMatrix invert(const QMatrix& m);
Rational determinant(const QMatrix& m);

QMatrix block_diagonal(std::span<const QMatrix> blocks);
/// Columns of `v` (a basis) spanning an invariant subspace of `m`: returns X with m v = v X.
/// Throws ConsistencyError if the span is not invariant.
QMatrix restrict_to(const QMatrix& m, const QMatrix& v);

}  // namespace rbmod
