#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rbmod/module.hpp"
#include "rbmod/qmatrix.hpp"
#include "rbmod/unipoly.hpp"

namespace rbmod {

/// Monic polynomial of least degree with f(A) = 0, from the first linear
/// dependency among I, A, A^2, ...
UniPoly minimal_polynomial(const QMatrix& a);

/// det(xI - A), by the Faddeev-LeVerrier recurrence.
UniPoly characteristic_polynomial(const QMatrix& a);

/// Distinct rational roots of f, ascending.
std::vector<Rational> rational_roots(const UniPoly& f);

struct Factor {
  UniPoly factor;  // monic
  std::size_t multiplicity;
  bool certified_irreducible;
};

/// f = unit * prod factor^multiplicity, factors pairwise coprime.
///
/// Factors come from the squarefree decomposition with every rational root
/// split off. A leftover of degree 2 or 3 has no rational root and is
/// therefore irreducible; a leftover of degree >= 4 is reported with
/// certified_irreducible = false. Ordered by degree, then linear factors by
/// increasing root.
struct Factorization {
  Rational unit;
  std::vector<Factor> factors;

  UniPoly expand() const;
};

/// Precondition: f != 0.
Factorization factor_over_Q(const UniPoly& f);

struct Component {
  UniPoly factor;
  std::size_t multiplicity;  // exponent r of the factor in the minimal polynomial
  bool certified_irreducible;
  QMatrix basis;  // columns span ker h(A)^r
  RBModule submodule;
};

struct Decomposition {
  std::vector<Component> components;

  /// All component bases side by side; invertible.
  QMatrix total_basis() const;
};

/// Splits M along the coprime factors h^r of the minimal polynomial of A.
/// Each kernel ker h(A)^r is checked to be B-invariant; a failure is a
/// ConsistencyError.
Decomposition primary_decompose(const RBModule& m);

/// Half-open range of 0-based indices.
struct BlockRange {
  std::size_t begin;
  std::size_t end;
};

/// With A block-diagonal along `partition` and the blocks' minimal
/// polynomials pairwise coprime, reports whether B is block-diagonal along
/// the same partition with every diagonal block pair satisfying the module
/// identity. Throws PreconditionError if the partition or A does not meet
/// those requirements.
bool block_form_check(const RBModule& m, std::span<const BlockRange> partition);

/// Invertible S with S^-1 A S and S^-1 B S both upper triangular.
/// Throws UnsupportedFieldExtension unless all eigenvalues of A are rational.
QMatrix triangularize(const RBModule& m);

}  // namespace rbmod
