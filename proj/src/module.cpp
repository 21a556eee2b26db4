#include "rbmod/module.hpp"

#include <random>
#include <string>

#include "rbmod/errors.hpp"
#include "rbmod/spectral.hpp"

namespace rbmod {

UniPoly IntegralOperator::operator()(const UniPoly& f) const {
  if (f.is_zero()) return {};
  std::vector<Rational> out(f.coefficients().size() + 1);
  for (std::size_t m = 0; m < f.coefficients().size(); ++m) out[m + 1] = f.coeff(m) / Rational(m + 1);
  return UniPoly(std::move(out));
}

UniPoly integral(const UniPoly& f) { return IntegralOperator{}(f); }

bool check_rota_baxter_axiom(const UniPoly& f, const UniPoly& g) {
  const UniPoly pf = integral(f);
  const UniPoly pg = integral(g);
  return pf * pg == integral(f * pg) + integral(pf * g);
}

RBModule verify(QMatrix a, QMatrix b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("verify: A and B must be square of equal size (got " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ")");
  const std::size_t n = a.rows();
  const QMatrix b2 = b * b;
  const QMatrix residual = commutator(a, b) - b2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!residual(i, j).is_zero())
        throw ValidationError(i + 1, j + 1,
                              "AB - BA = B^2 fails at entry (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + "): AB - BA - B^2 = " + residual(i, j).to_string());

  // P(x^m)(A) B == B (P(x^m)(A) + A^m B)
  QMatrix a_pow = QMatrix::identity(n);
  for (std::size_t m = 0; m <= n; ++m) {
    const QMatrix pa = poly_eval_matrix(integral(UniPoly::monomial(1, m)), a);
    if (pa * b != b * (pa + a_pow * b))
      throw ConsistencyError("module identity fails for r = x^" + std::to_string(m) +
                             " although the commutator criterion holds");
    a_pow = a_pow * a;
  }
  if (n > 0 && !b.pow(static_cast<unsigned>(n)).is_zero())
    throw ConsistencyError("verified operator is not nilpotent");
  return RBModule(std::move(a), std::move(b));
}

std::size_t nilpotency_index(const RBModule& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 0;
  QMatrix p = m.operator_matrix();
  for (std::size_t k = 1; k <= n; ++k) {
    if (p.is_zero()) return k;
    p = p * m.operator_matrix();
  }
  throw ConsistencyError("nilpotency_index: B^n != 0");
}

RBModule direct_sum(std::span<const RBModule> ms) {
  std::vector<QMatrix> as;
  std::vector<QMatrix> bs;
  for (const auto& m : ms) {
    as.push_back(m.x_action());
    bs.push_back(m.operator_matrix());
  }
  return verify(block_diagonal(as), block_diagonal(bs));
}

RBModule conjugate(const RBModule& m, const QMatrix& s) {
  const QMatrix inv = invert(s);
  return verify(inv * m.x_action() * s, inv * m.operator_matrix() * s);
}

std::vector<QMatrix> hom_space(const RBModule& m1, const RBModule& m2) {
  const std::size_t n1 = m1.dim();
  const std::size_t n2 = m2.dim();
  const std::size_t unknowns = n1 * n2;
  // Phi is n2 x n1, unknown (p, q) has index p*n1 + q.
  QMatrix sys(2 * unknowns, unknowns);
  auto fill = [&](const QMatrix& x1, const QMatrix& x2, std::size_t row_off) {
    for (std::size_t i = 0; i < n2; ++i) {
      for (std::size_t j = 0; j < n1; ++j) {
        const std::size_t row = row_off + i * n1 + j;
        // (Phi X1)_{ij} = sum_k Phi_{ik} X1_{kj}
        for (std::size_t k = 0; k < n1; ++k) sys(row, i * n1 + k) += x1(k, j);
        // (X2 Phi)_{ij} = sum_k X2_{ik} Phi_{kj}
        for (std::size_t k = 0; k < n2; ++k) sys(row, k * n1 + j) -= x2(i, k);
      }
    }
  };
  fill(m1.x_action(), m2.x_action(), 0);
  fill(m1.operator_matrix(), m2.operator_matrix(), unknowns);
  std::vector<QMatrix> basis;
  for (const Vector& v : nullspace(sys)) {
    QMatrix phi(n2, n1);
    for (std::size_t p = 0; p < n2; ++p)
      for (std::size_t q = 0; q < n1; ++q) phi(p, q) = v[p * n1 + q];
    basis.push_back(std::move(phi));
  }
  return basis;
}

namespace {

constexpr std::size_t kExhaustiveGridLimit = 4096;
constexpr int kRandomProbes = 24;

bool same_invariants(const RBModule& m1, const RBModule& m2) {
  if (characteristic_polynomial(m1.x_action()) != characteristic_polynomial(m2.x_action())) return false;
  QMatrix p1 = m1.operator_matrix();
  QMatrix p2 = m2.operator_matrix();
  for (std::size_t k = 1; k <= m1.dim(); ++k) {
    if (rank(p1) != rank(p2)) return false;
    if (p1.is_zero()) break;
    p1 = p1 * m1.operator_matrix();
    p2 = p2 * m2.operator_matrix();
  }
  return true;
}

QMatrix combine(const std::vector<QMatrix>& basis, const std::vector<Rational>& t) {
  QMatrix phi(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!t[i].is_zero()) phi += t[i] * basis[i];
  return phi;
}

}  // namespace

std::optional<QMatrix> find_isomorphism(const RBModule& m1, const RBModule& m2) {
  const std::size_t n = m1.dim();
  if (n != m2.dim()) return std::nullopt;
  if (n == 0) return QMatrix{};
  if (!same_invariants(m1, m2)) return std::nullopt;
  const std::vector<QMatrix> basis = hom_space(m1, m2);
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;

  for (const auto& phi : basis)
    if (!determinant(phi).is_zero()) return phi;

  std::size_t grid = 1;
  bool small = true;
  for (std::size_t i = 0; i < d && small; ++i) {
    grid *= n + 1;
    small = grid <= kExhaustiveGridLimit;
  }
  if (small) {
    std::vector<Rational> t(d);
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
      for (std::size_t i = 0; i < d; ++i) t[i] = Rational(idx[i]);
      QMatrix phi = combine(basis, t);
      if (!determinant(phi).is_zero()) return phi;
      std::size_t k = 0;
      while (k < d && ++idx[k] > n) idx[k++] = 0;
      if (k == d) return std::nullopt;
    }
  }

  std::mt19937_64 gen(0x5eed0fa1u);
  std::uniform_int_distribution<long> coin(-(1L << 20), 1L << 20);
  std::vector<Rational> t(d);
  for (int probe = 0; probe < kRandomProbes; ++probe) {
    for (auto& ti : t) ti = Rational(coin(gen));
    QMatrix phi = combine(basis, t);
    if (!determinant(phi).is_zero()) return phi;
  }
  return std::nullopt;
}

bool is_isomorphic(const RBModule& m1, const RBModule& m2) { return find_isomorphism(m1, m2).has_value(); }

Decision is_irreducible(const RBModule& m) {
  if (m.dim() == 0 || !m.operator_matrix().is_zero()) return Decision::No;
  const UniPoly f = minimal_polynomial(m.x_action());
  if (static_cast<std::size_t>(f.degree()) != m.dim()) return Decision::No;
  const Factorization fac = factor_over_Q(f);
  if (fac.factors.size() != 1 || fac.factors.front().multiplicity != 1) return Decision::No;
  return fac.factors.front().certified_irreducible ? Decision::Yes : Decision::Undecided;
}

bool is_semisimple(const RBModule& m) {
  if (!m.operator_matrix().is_zero()) return false;
  const UniPoly f = minimal_polynomial(m.x_action());
  return poly_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace rbmod
