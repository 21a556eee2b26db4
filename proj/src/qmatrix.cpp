#include "rbmod/qmatrix.hpp"

#include <sstream>
#include <utility>

#include "rbmod/errors.hpp"

namespace rbmod {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::diagonal(const Vector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector QMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector QMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("submatrix out of range");
  QMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

QMatrix QMatrix::pow(unsigned e) const {
  if (!is_square()) throw ShapeError("pow of a non-square matrix");
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool QMatrix::is_strictly_upper() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool QMatrix::is_upper() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

QMatrix operator*(const Rational& s, QMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) { return a * b; }

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("commutator: operands must be square of equal size");
  return a * b - b * a;
}

Vector mat_vec(const QMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw ShapeError("matrix-vector product: length mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

RowEchelon rref(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    const Rational inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Rational f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

namespace {

std::vector<Vector> kernel_from_rref(const RowEchelon& e, std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vector> nullspace(const QMatrix& m) { return kernel_from_rref(rref(m), m.cols()); }

LinearSolution solve_linear(const QMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw ShapeError("solve_linear: rhs length differs from row count");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  RowEchelon e = rref(aug);
  LinearSolution sol;
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return sol;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.reduced(k, m.cols());
  sol.particular = std::move(x);
  // The augmented column is never a pivot here, so the kernel of m falls out
  // of the same echelon form.
  RowEchelon left{e.reduced.submatrix(0, 0, e.reduced.rows(), m.cols()), e.pivot_cols};
  sol.kernel = kernel_from_rref(left, m.cols());
  return sol;
}

QMatrix invert(const QMatrix& m) {
  if (!m.is_square()) throw ShapeError("invert: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    throw SingularMatrixError("invert: matrix is singular");
  return e.reduced.submatrix(0, n, n, n);
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant: matrix is not square");
  QMatrix r = m;
  const std::size_t n = r.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && r(p, col).is_zero()) ++p;
    if (p == n) return Rational{};
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(p, j), r(col, j));
      det = -det;
    }
    det *= r(col, col);
    const Rational inv = r(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col).is_zero()) continue;
      const Rational f = r(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) r(i, j) -= f * r(col, j);
    }
  }
  return det;
}

QMatrix block_diagonal(std::span<const QMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw ShapeError("block_diagonal: blocks must be square");
    n += b.rows();
  }
  QMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

QMatrix restrict_to(const QMatrix& m, const QMatrix& v) {
  if (!m.is_square() || v.rows() != m.rows()) throw ShapeError("restrict_to: shape mismatch");
  const std::size_t k = v.cols();
  const QMatrix image = m * v;
  QMatrix x(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const Vector col = image.column(j);
    LinearSolution s = solve_linear(v, col);
    if (!s.particular) throw ConsistencyError("restrict_to: subspace is not invariant");
    if (!s.kernel.empty()) throw ConsistencyError("restrict_to: basis columns are dependent");
    for (std::size_t i = 0; i < k; ++i) x(i, j) = (*s.particular)[i];
  }
  return x;
}

}  // namespace rbmod
