#include "rbmod/single_block.hpp"

#include <stdexcept>
#include <string>

#include "rbmod/errors.hpp"

namespace rbmod {

QMatrix jordan_block(std::size_t n, const Rational& a) {
  QMatrix j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = a;
    if (i + 1 < n) j(i, i + 1) = 1;
  }
  return j;
}

StabilizerElement::StabilizerElement(std::vector<Rational> coeffs) : s_(std::move(coeffs)) {
  if (s_.empty()) throw std::invalid_argument("StabilizerElement: no coefficients");
  if (s_.front().is_zero()) throw std::invalid_argument("StabilizerElement: s_0 must be nonzero");
}

QMatrix StabilizerElement::matrix() const {
  const std::size_t n = s_.size();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = s_[j - i];
  return m;
}

StabilizerElement StabilizerElement::inverse() const {
  const std::size_t n = s_.size();
  std::vector<Rational> t(n);
  const Rational inv0 = s_[0].inverse();
  t[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += s_[j] * t[k - j];
    t[k] = -acc * inv0;
  }
  return StabilizerElement(std::move(t));
}

SingleBlockModule SingleBlockModule::from_matrix(const Rational& a, QMatrix b) {
  if (!b.is_square() || b.rows() == 0) throw ShapeError("single-block module needs a nonempty square B");
  verify(jordan_block(b.rows(), a), b);
  return SingleBlockModule(a, std::move(b));
}

Vector SingleBlockModule::last_column() const {
  Vector col = psi();
  col.pop_back();
  return col;
}

RBModule SingleBlockModule::to_module() const { return verify(jordan_block(dim(), a_), b_); }

SingleBlockModule construct_from_last_column(std::size_t n, const Rational& a, std::span<const Rational> last) {
  if (n == 0) throw PreconditionError("construct_from_last_column: n must be at least 1");
  if (last.size() + 1 != n)
    throw ShapeError("construct_from_last_column: expected " + std::to_string(n - 1) + " entries, got " +
                     std::to_string(last.size()));
  // 1-based accessors to keep the recursion readable.
  QMatrix b(n, n);
  auto at = [&b](std::size_t i, std::size_t j) -> Rational& { return b(i - 1, j - 1); };
  for (std::size_t i = 1; i < n; ++i) at(i, n) = last[i - 1];

  auto degenerate = [n](std::size_t band, std::size_t row, std::size_t j) {
    std::string banned = "{-1";
    for (std::size_t k = 2; k + 2 <= n; ++k) banned += ", -1/" + std::to_string(k);
    banned += "}";
    return DegenerateColumnError(band, row,
                                 "degenerate last column: no module exists (1 + b_{" + std::to_string(j) + "," +
                                     std::to_string(j + 1) + "} = 0 while filling band " +
                                     std::to_string(band) + ", row " + std::to_string(row) +
                                     "); b_{n-1,n} must avoid " + banned);
  };

  for (std::size_t i = n - 1; i-- > 1;) {
    const Rational denom = 1 + at(i + 1, i + 2);
    if (denom.is_zero()) throw degenerate(1, i, i + 1);
    at(i, i + 1) = at(i + 1, i + 2) / denom;
  }
  for (std::size_t d = 2; d + 1 < n; ++d) {
    for (std::size_t i = n - d; i-- > 1;) {
      Rational num = at(i + 1, i + d + 1) * (1 - at(i, i + 1));
      for (std::size_t k = i + 2; k <= i + d - 1; ++k) num -= at(i, k) * at(k, i + d + 1);
      const Rational denom = 1 + at(i + d, i + d + 1);
      if (denom.is_zero()) throw degenerate(d, i, i + d);
      at(i, i + d) = num / denom;
    }
  }
  try {
    return SingleBlockModule::from_matrix(a, std::move(b));
  } catch (const ValidationError& e) {
    throw ConsistencyError(std::string("construct_from_last_column: reconstructed B fails verification: ") +
                           e.what());
  }
}

std::size_t depth(std::span<const Rational> psi) {
  const std::size_t n = psi.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!psi[n - i - 1].is_zero()) return i;
  return n;
}

std::vector<std::size_t> invariant_positions(std::size_t n, std::size_t depth) {
  std::vector<std::size_t> out;
  if (depth >= n || depth == 0) return out;
  std::size_t first = 1;
  if (depth == 1)
    first = n - 1;
  else if (depth <= (n - 1) / 2)
    first = n - 2 * depth + 1;
  for (std::size_t j = first; j <= n; ++j) out.push_back(j);
  return out;
}

std::string to_string(CanonicalTag tag) {
  switch (tag) {
    case CanonicalTag::Zero: return "Zero";
    case CanonicalTag::Depth1: return "Depth1";
    case CanonicalTag::MidDepth: return "MidDepth";
    case CanonicalTag::Center: return "Center";
  }
  return "?";
}

CanonicalTag tag_for_depth(std::size_t n, std::size_t depth) {
  if (depth >= n) return CanonicalTag::Zero;
  if (depth == 1) return CanonicalTag::Depth1;
  if (depth <= (n - 1) / 2) return CanonicalTag::MidDepth;
  return CanonicalTag::Center;
}

Vector CanonicalForm::last_column(std::size_t n) const {
  Vector col(n - 1);
  switch (tag) {
    case CanonicalTag::Zero: break;
    case CanonicalTag::Depth1: col[n - 2] = kept.at(0); break;
    case CanonicalTag::MidDepth:
      for (std::size_t k = 0; k < kept.size(); ++k) col[n - 2 * depth + k] = kept[k];
      break;
    case CanonicalTag::Center:
      for (std::size_t k = 0; k < kept.size(); ++k) col[k] = kept[k];
      break;
  }
  return col;
}

std::optional<StabilizerElement> find_stabilizer_intertwiner(const QMatrix& from, const QMatrix& to) {
  if (!from.is_square() || from.rows() != to.rows() || !to.is_square())
    throw ShapeError("find_stabilizer_intertwiner: shape mismatch");
  const std::size_t n = from.rows();
  const QMatrix j = jordan_block(n, 0);
  // sum_k s_k (J^k from - to J^k) = 0
  QMatrix sys(n * n, n);
  QMatrix jk = QMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const QMatrix term = jk * from - to * jk;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(r * n + c, k) = term(r, c);
    jk = jk * j;
  }
  for (Vector& v : nullspace(sys)) {
    if (v[0].is_zero()) continue;
    const Rational inv = v[0].inverse();
    for (auto& x : v) x *= inv;
    return StabilizerElement(std::move(v));
  }
  return std::nullopt;
}

Canonicalization canonicalize(const SingleBlockModule& m) {
  const std::size_t n = m.dim();
  const Vector psi = m.psi();
  const std::size_t i = depth(psi);
  CanonicalForm form{tag_for_depth(n, i), i, {}};
  switch (form.tag) {
    case CanonicalTag::Zero: break;
    case CanonicalTag::Depth1: form.kept.push_back(psi[n - 2]); break;
    case CanonicalTag::MidDepth:
      for (std::size_t pos = n - 2 * i + 1; pos <= n - i; ++pos) form.kept.push_back(psi[pos - 1]);
      break;
    case CanonicalTag::Center:
      for (std::size_t pos = 1; pos <= n - i; ++pos) form.kept.push_back(psi[pos - 1]);
      break;
  }
  SingleBlockModule canonical = construct_from_last_column(n, m.eigenvalue(), form.last_column(n));
  auto witness = find_stabilizer_intertwiner(canonical.operator_matrix(), m.operator_matrix());
  if (!witness) throw ConsistencyError("canonicalize: no element of G_n conjugates the input to its canonical form");
  return {std::move(form), std::move(canonical), std::move(*witness)};
}

SingleBlockModule conjugate(const SingleBlockModule& m, const StabilizerElement& s) {
  if (s.size() != m.dim()) throw ShapeError("conjugate: stabilizer size differs from module dimension");
  return SingleBlockModule::from_matrix(m.eigenvalue(),
                                        s.inverse().matrix() * m.operator_matrix() * s.matrix());
}

std::optional<StabilizerElement> single_block_isomorphism(const SingleBlockModule& m1, const SingleBlockModule& m2) {
  if (m1.dim() != m2.dim() || m1.eigenvalue() != m2.eigenvalue()) return std::nullopt;
  return find_stabilizer_intertwiner(m1.operator_matrix(), m2.operator_matrix());
}

bool single_block_isomorphic(const SingleBlockModule& m1, const SingleBlockModule& m2) {
  if (m1.dim() != m2.dim() || m1.eigenvalue() != m2.eigenvalue()) return false;
  const bool by_forms = canonicalize(m1).form == canonicalize(m2).form;
  const bool by_solver = single_block_isomorphism(m1, m2).has_value();
  if (by_forms != by_solver)
    throw ConsistencyError("single_block_isomorphic: canonical forms and the G_n solver disagree");
  return by_forms;
}

std::vector<CanonicalTemplate> enumerate_canonical(std::size_t n) {
  if (n == 0) throw PreconditionError("enumerate_canonical: n must be at least 1");
  std::vector<CanonicalTemplate> out;
  if (n >= 2) {
    std::vector<std::string> psi(n, "0");
    psi[n - 2] = "b";
    std::string banned = "b ∉ {0";
    for (std::size_t k = 1; k + 2 <= n; ++k) banned += k == 1 ? ", -1" : ", -1/" + std::to_string(k);
    banned += "}";
    out.push_back({CanonicalTag::Depth1, 1, std::move(psi), std::move(banned)});
  }
  static const std::string names = "cdefghklmqrstuvw";
  auto param = [](std::size_t k) {
    return k < names.size() ? std::string(1, names[k]) : "c" + std::to_string(k);
  };
  for (std::size_t i = 2; i < n; ++i) {
    const CanonicalTag tag = tag_for_depth(n, i);
    std::vector<std::string> psi(n, "0");
    const std::size_t first = tag == CanonicalTag::MidDepth ? n - 2 * i + 1 : 1;
    for (std::size_t pos = n - i, k = 0; pos >= first; --pos, ++k) psi[pos - 1] = param(k);
    out.push_back({tag, i, std::move(psi), "c ≠ 0"});
  }
  out.push_back({CanonicalTag::Zero, n, std::vector<std::string>(n, "0"), ""});
  return out;
}

SquareZeroClassification square_zero_classify(const RBModule& m) {
  const std::size_t n = m.dim();
  const QMatrix& a = m.x_action();
  const QMatrix& b = m.operator_matrix();
  if (n == 0) throw PreconditionError("square_zero_classify: empty module");
  const Rational scalar = a(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != (i == j ? scalar : Rational{}))
        throw PreconditionError("square_zero_classify: A is not a scalar matrix");
  if (!(b * b).is_zero()) throw ConsistencyError("square_zero_classify: B^2 != 0 for a verified module");

  const RowEchelon ech = rref(b);
  const std::size_t ell = ech.pivot_cols.size();
  if (2 * ell > n) throw ConsistencyError("square_zero_classify: rank B exceeds n/2");

  std::vector<Vector> images;
  std::vector<Vector> preimages;
  for (std::size_t c : ech.pivot_cols) {
    Vector w(n);
    w[c] = 1;
    images.push_back(b.column(c));
    preimages.push_back(std::move(w));
  }
  // Extend the image of B to a basis of ker B.
  std::vector<Vector> kernel_part;
  std::vector<Vector> span = images;
  for (const Vector& v : nullspace(b)) {
    span.push_back(v);
    if (rank(QMatrix::from_columns(span, n)) < span.size()) {
      span.pop_back();
      continue;
    }
    kernel_part.push_back(v);
  }
  if (kernel_part.size() + 2 * ell != n) throw ConsistencyError("square_zero_classify: basis size mismatch");

  std::vector<Vector> cols = kernel_part;
  for (std::size_t k = 0; k < ell; ++k) {
    cols.push_back(images[k]);
    cols.push_back(preimages[k]);
  }
  QMatrix basis = QMatrix::from_columns(cols, n);
  RBModule normal = conjugate(m, basis);
  return {ell, std::move(basis), std::move(normal)};
}

}  // namespace rbmod
