#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rbmod/qmatrix.hpp"
#include "rbmod/unipoly.hpp"

namespace rbmod {

/// A finite-dimensional Rota-Baxter module over (Q[x], P): the matrix A of
/// the x-action and the matrix B of the operator p, with AB - BA = B^2.
/// Instances only come out of verify(), so the identity always holds.
class RBModule {
 public:
  std::size_t dim() const noexcept { return a_.rows(); }
  const QMatrix& x_action() const noexcept { return a_; }
  const QMatrix& operator_matrix() const noexcept { return b_; }

  friend bool operator==(const RBModule&, const RBModule&) = default;

 private:
  RBModule(QMatrix a, QMatrix b) : a_(std::move(a)), b_(std::move(b)) {}
  friend RBModule verify(QMatrix a, QMatrix b);

  QMatrix a_;
  QMatrix b_;
};

/// The integration operator P(x^m) = x^{m+1}/(m+1) on Q[x].
struct IntegralOperator {
  UniPoly operator()(const UniPoly& f) const;
};

UniPoly integral(const UniPoly& f);

/// P(f)P(g) == P(f P(g)) + P(P(f) g).
bool check_rota_baxter_axiom(const UniPoly& f, const UniPoly& g);

/// Validates AB - BA = B^2. Throws ShapeError on mismatched shapes and
/// ValidationError naming the first failing entry (row-major) otherwise.
/// Also re-derives the module identity P(r)p(v) = p(P(r)v + r p(v)) for
/// r = x^m, m = 0..n, and B^n = 0; a disagreement there is a ConsistencyError.
RBModule verify(QMatrix a, QMatrix b);

/// Smallest k with B^k = 0 (1 when B = 0, 0 for the zero-dimensional module).
std::size_t nilpotency_index(const RBModule& m);

RBModule direct_sum(std::span<const RBModule> ms);

/// (S^-1 A S, S^-1 B S).
RBModule conjugate(const RBModule& m, const QMatrix& s);

/// Basis of {Phi : Phi A1 = A2 Phi, Phi B1 = B2 Phi}; each Phi is dim2 x dim1.
std::vector<QMatrix> hom_space(const RBModule& m1, const RBModule& m2);

/// An invertible element of hom_space(m1, m2), if one exists.
///
/// det(sum t_i Phi_i) has degree at most n in each t_i. When the grid
/// {0..n}^d is small it is scanned exhaustively, which decides the question.
/// Larger hom spaces are probed at a fixed pseudo-random sequence of points
/// drawn from [-2^20, 2^20]^d; a "no" there is wrong with probability below
/// (n / 2^21)^24.
std::optional<QMatrix> find_isomorphism(const RBModule& m1, const RBModule& m2);
bool is_isomorphic(const RBModule& m1, const RBModule& m2);

enum class Decision { No, Yes, Undecided };

/// B = 0 and the minimal polynomial of A is irreducible of degree n.
/// Undecided when that polynomial has degree >= 4, no rational root, and so
/// cannot be certified.
Decision is_irreducible(const RBModule& m);

/// B = 0 and the minimal polynomial of A is squarefree.
bool is_semisimple(const RBModule& m);

}  // namespace rbmod
