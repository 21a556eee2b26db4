#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>

#include "rbmod/module.hpp"
#include "rbmod/ncpoly.hpp"
#include "rbmod/qmatrix.hpp"
#include "rbmod/single_block.hpp"

namespace rbtest {

using rbmod::QMatrix;
using rbmod::Rational;
using rbmod::Vector;

enum class OracleStatus { Solved, NoSolution, Underdetermined };

struct OracleResult {
  OracleStatus status;
  QMatrix b;  // meaningful when Solved
};

/// Solves J_n B - B J_n = B^2 for strictly upper triangular B with a fixed
/// last column, one unknown at a time. Each unknown b_{i,i+d} is pinned by
/// the residual entry (i, i+d+1), which is affine in it; the two-point
/// evaluation of that residual gives the coefficients. NoSolution means an
/// equation 0 * b = c with c != 0 (or a nonzero final residual).
OracleResult brute_force_operator(std::size_t n, std::span<const Rational> last);

/// J_n(0) B - B J_n(0) - B^2.
QMatrix residual(const QMatrix& b);

/// For n = 5 and depth 2: S = I + alpha J with alpha = b15 / b35^2 clears
/// the first entry of the last column.
Rational depth2_n5_alpha(const QMatrix& b);

Rational random_int(std::mt19937_64& rng, long lo, long hi);

/// Random last column with entries in [lo, hi]; degenerate draws are
/// redrawn.
rbmod::SingleBlockModule random_single_block(std::mt19937_64& rng, std::size_t n, const Rational& a, long lo, long hi);

/// s_0 in {1,2,3}, other coefficients in {-3..3}.
rbmod::StabilizerElement random_stabilizer(std::mt19937_64& rng, std::size_t n);

/// Entries in {-lo..hi}, redrawn until the determinant is nonzero.
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long lo = -2, long hi = 2);

/// Literal rewriting: replace the leftmost "yx" of every word by xy - y^2,
/// repeat until nothing changes. Slow, but a direct reading of the rule.
rbmod::NCPoly rewrite_by_passes(const rbmod::NCPoly& f);

/// Every witness of an isomorphism must be checked by hand, not trusted.
bool is_intertwiner(const QMatrix& phi, const rbmod::RBModule& m1, const rbmod::RBModule& m2);

}  // namespace rbtest
