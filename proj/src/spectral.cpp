#include "rbmod/spectral.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rbmod/errors.hpp"

namespace rbmod {

UniPoly minimal_polynomial(const QMatrix& a) {
  if (!a.is_square()) throw ShapeError("minimal_polynomial: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Vector> powers;
  QMatrix p = QMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(p(i, j));
    if (k > 0) {
      LinearSolution s = solve_linear(QMatrix::from_columns(powers, n * n), flat);
      if (s.particular) {
        std::vector<Rational> c(k + 1);
        for (std::size_t i = 0; i < k; ++i) c[i] = -(*s.particular)[i];
        c[k] = 1;
        return UniPoly(std::move(c));
      }
    } else if (n == 0) {
      return UniPoly::constant(1);
    }
    powers.push_back(std::move(flat));
    p = p * a;
  }
  throw ConsistencyError("minimal_polynomial: no dependency up to degree n");
}

UniPoly characteristic_polynomial(const QMatrix& a) {
  if (!a.is_square()) throw ShapeError("characteristic_polynomial: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const QMatrix am = a * m;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(k);
  }
  return UniPoly(std::move(c));
}

namespace {

// Number of sign changes of the Sturm sequence at x, zeros skipped.
std::size_t sign_variations(const std::vector<UniPoly>& sturm, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& s : sturm) {
    const int sg = s.eval(x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& h) {
  std::vector<UniPoly> seq{h, h.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = UniPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

// Integer roots of a squarefree monic integer polynomial. All its rational
// roots are integers, so half-integers are never roots and make safe Sturm
// endpoints.
std::vector<mpz_class> integer_roots(const UniPoly& h) {
  std::vector<mpz_class> roots;
  if (h.degree() < 1) return roots;
  mpz_class bound = 0;
  for (const auto& c : h.coefficients()) {
    mpz_class m = abs(c.numerator());
    if (m > bound) bound = m;
  }
  bound += 1;
  const std::vector<UniPoly> sturm = sturm_sequence(h);
  const Rational half(1, 2);
  auto count = [&](const mpz_class& lo, const mpz_class& hi) {
    // roots in (lo + 1/2, hi + 1/2)
    return sign_variations(sturm, Rational(lo, 1) + half) - sign_variations(sturm, Rational(hi, 1) + half);
  };
  std::function<void(const mpz_class&, const mpz_class&)> search = [&](const mpz_class& lo, const mpz_class& hi) {
    if (count(lo, hi) == 0) return;
    if (hi - lo == 1) {
      if (h.eval(Rational(hi, 1)).is_zero()) roots.push_back(hi);
      return;
    }
    mpz_class mid = lo + (hi - lo) / 2;
    search(lo, mid);
    search(mid, hi);
  };
  search(-bound - 1, bound);
  return roots;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coefficients();
  const auto& cb = b.factor.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] > cb[i];
  return a.multiplicity < b.multiplicity;
}

std::size_t multiplicity_in(UniPoly f, const UniPoly& h) {
  std::size_t k = 0;
  for (;;) {
    auto [q, r] = UniPoly::divmod(f, h);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.degree() < 1) return {};
  UniPoly g = UniPoly::divmod(f, poly_gcd(f, f.derivative())).first.monic();
  std::vector<Rational> roots;
  if (g.coeff(0).is_zero()) {
    roots.emplace_back(0);
    g = UniPoly::divmod(g, UniPoly::monomial(1, 1)).first;
  }
  if (g.degree() >= 1) {
    mpz_class lcm = 1;
    for (const auto& c : g.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const std::size_t d = static_cast<std::size_t>(g.degree());
    std::vector<mpz_class> ints(d + 1);
    for (std::size_t i = 0; i <= d; ++i) ints[i] = (g.coeff(i) * Rational(lcm, 1)).numerator();
    const mpz_class lead = ints[d];
    // h(y) = lead^{d-1} g(y / lead), monic with integer coefficients
    std::vector<Rational> hc(d + 1);
    mpz_class scale = 1;
    for (std::size_t i = d; i-- > 0;) {
      hc[i] = Rational(ints[i] * scale, 1);
      scale *= lead;
    }
    hc[d] = 1;
    for (const auto& y : integer_roots(UniPoly(std::move(hc)))) roots.emplace_back(y, lead);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UniPoly Factorization::expand() const {
  UniPoly p = UniPoly::constant(unit);
  for (const auto& f : factors) p = p * f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

Factorization factor_over_Q(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("factor_over_Q: zero polynomial");
  Factorization out;
  out.unit = f.leading();
  const UniPoly monic = f.monic();
  UniPoly c = poly_gcd(monic, monic.derivative());
  UniPoly w = UniPoly::divmod(monic, c).first;
  std::size_t mult = 1;
  auto emit = [&](const UniPoly& part, std::size_t m) {
    UniPoly rest = part.monic();
    for (const auto& r : rational_roots(rest)) {
      out.factors.push_back({UniPoly::linear(r), m, true});
      rest = UniPoly::divmod(rest, UniPoly::linear(r)).first;
    }
    if (rest.degree() >= 1) out.factors.push_back({rest, m, rest.degree() <= 3});
  };
  while (w.degree() > 0) {
    UniPoly y = poly_gcd(w, c);
    UniPoly z = UniPoly::divmod(w, y).first;
    if (z.degree() > 0) emit(z, mult);
    ++mult;
    w = y;
    c = UniPoly::divmod(c, y).first;
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

QMatrix Decomposition::total_basis() const {
  std::vector<Vector> cols;
  std::size_t n = 0;
  for (const auto& c : components) {
    n = c.basis.rows();
    for (std::size_t j = 0; j < c.basis.cols(); ++j) cols.push_back(c.basis.column(j));
  }
  return QMatrix::from_columns(cols, n);
}

Decomposition primary_decompose(const RBModule& m) {
  const QMatrix& a = m.x_action();
  const QMatrix& b = m.operator_matrix();
  const std::size_t n = m.dim();
  Decomposition out;
  if (n == 0) return out;
  const UniPoly charpoly = characteristic_polynomial(a);
  std::size_t total = 0;
  for (const auto& fac : factor_over_Q(minimal_polynomial(a)).factors) {
    const QMatrix hr = poly_eval_matrix(fac.factor.pow(static_cast<unsigned>(fac.multiplicity)), a);
    const QMatrix basis = QMatrix::from_columns(nullspace(hr), n);
    const std::size_t expected =
        static_cast<std::size_t>(fac.factor.degree()) * multiplicity_in(charpoly, fac.factor);
    if (basis.cols() != expected)
      throw ConsistencyError("primary_decompose: component for " + fac.factor.to_string() + " has dimension " +
                             std::to_string(basis.cols()) + ", expected " + std::to_string(expected));
    QMatrix sub_a = restrict_to(a, basis);
    QMatrix sub_b;
    try {
      sub_b = restrict_to(b, basis);
    } catch (const ConsistencyError&) {
      throw ConsistencyError("primary_decompose: component for " + fac.factor.to_string() +
                             " is not invariant under p");
    }
    total += basis.cols();
    out.components.push_back(
        {fac.factor, fac.multiplicity, fac.certified_irreducible, basis, verify(std::move(sub_a), std::move(sub_b))});
  }
  if (total != n) throw ConsistencyError("primary_decompose: components do not fill the module");
  return out;
}

bool block_form_check(const RBModule& m, std::span<const BlockRange> partition) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> block_of(n);
  std::size_t next = 0;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const auto& r = partition[k];
    if (r.begin != next || r.end <= r.begin || r.end > n)
      throw PreconditionError("block_form_check: partition must be contiguous nonempty ranges covering 1..n");
    for (std::size_t i = r.begin; i < r.end; ++i) block_of[i] = k;
    next = r.end;
  }
  if (next != n) throw PreconditionError("block_form_check: partition does not cover 1..n");

  const QMatrix& a = m.x_action();
  const QMatrix& b = m.operator_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (block_of[i] != block_of[j] && !a(i, j).is_zero())
        throw PreconditionError("block_form_check: A is not block-diagonal along the partition");

  std::vector<QMatrix> a_blocks;
  std::vector<UniPoly> minpolys;
  for (const auto& r : partition) {
    a_blocks.push_back(a.submatrix(r.begin, r.begin, r.end - r.begin, r.end - r.begin));
    minpolys.push_back(minimal_polynomial(a_blocks.back()));
  }
  for (std::size_t i = 0; i < minpolys.size(); ++i)
    for (std::size_t j = i + 1; j < minpolys.size(); ++j)
      if (poly_gcd(minpolys[i], minpolys[j]).degree() > 0)
        throw PreconditionError("block_form_check: blocks " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " have common eigenvalues");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (block_of[i] != block_of[j] && !b(i, j).is_zero()) return false;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const auto& r = partition[k];
    const QMatrix bk = b.submatrix(r.begin, r.begin, r.end - r.begin, r.end - r.begin);
    if (commutator(a_blocks[k], bk) != bk * bk) return false;
  }
  return true;
}

namespace {

// Chosen columns followed by the first standard basis vectors that keep the
// set independent.
QMatrix complete_basis(const std::vector<Vector>& chosen, std::size_t n) {
  std::vector<Vector> cols = chosen;
  for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
    Vector v(n);
    v[e] = 1;
    cols.push_back(v);
    if (rank(QMatrix::from_columns(cols, n)) < cols.size()) cols.pop_back();
  }
  return QMatrix::from_columns(cols, n);
}

}  // namespace

QMatrix triangularize(const RBModule& m) {
  const std::size_t n = m.dim();
  if (n == 0) return QMatrix{};
  for (const auto& f : factor_over_Q(minimal_polynomial(m.x_action())).factors)
    if (f.factor.degree() > 1)
      throw UnsupportedFieldExtension("triangularize: eigenvalues of A are not all rational (factor " +
                                      f.factor.to_string() + ")");

  std::vector<Vector> chosen;
  for (std::size_t j = 0; j < n; ++j) {
    const QMatrix t = complete_basis(chosen, n);
    const QMatrix t_inv = invert(t);
    const std::size_t k = n - j;
    const QMatrix a_q = (t_inv * m.x_action() * t).submatrix(j, j, k, k);
    const QMatrix b_q = (t_inv * m.operator_matrix() * t).submatrix(j, j, k, k);
    // ker B is A-invariant on the quotient as well: B A v = A B v - B^2 v = 0.
    const QMatrix kernel = QMatrix::from_columns(nullspace(b_q), k);
    if (kernel.cols() == 0) throw ConsistencyError("triangularize: quotient operator is not nilpotent");
    const QMatrix x = restrict_to(a_q, kernel);
    const std::vector<Rational> eig = rational_roots(minimal_polynomial(x));
    if (eig.empty()) throw ConsistencyError("triangularize: no rational eigenvalue on ker B");
    QMatrix shifted = x;
    for (std::size_t i = 0; i < x.rows(); ++i) shifted(i, i) -= eig.front();
    const Vector w = nullspace(shifted).front();
    const Vector v_q = mat_vec(kernel, w);
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l) v[i] += t(i, j + l) * v_q[l];
    chosen.push_back(std::move(v));
  }
  QMatrix s = QMatrix::from_columns(chosen, n);
  const QMatrix s_inv = invert(s);
  if (!(s_inv * m.x_action() * s).is_upper() || !(s_inv * m.operator_matrix() * s).is_upper())
    throw ConsistencyError("triangularize: result is not upper triangular");
  return s;
}

}  // namespace rbmod
