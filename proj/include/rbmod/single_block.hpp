#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbmod/module.hpp"
#include "rbmod/qmatrix.hpp"

namespace rbmod {

/// Jordan block J_n(a): a on the diagonal, 1 on the superdiagonal.
QMatrix jordan_block(std::size_t n, const Rational& a);

/// s_0 I + s_1 J + ... + s_{n-1} J^{n-1} with s_0 != 0: an invertible matrix
/// commuting with J_n.
class StabilizerElement {
 public:
  /// Throws std::invalid_argument if coeffs is empty or coeffs[0] == 0.
  explicit StabilizerElement(std::vector<Rational> coeffs);

  std::size_t size() const noexcept { return s_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return s_; }
  QMatrix matrix() const;
  StabilizerElement inverse() const;

  friend bool operator==(const StabilizerElement&, const StabilizerElement&) = default;

 private:
  std::vector<Rational> s_;
};

/// Q[x]/(x - a)^n with its Rota-Baxter operator, in the basis
/// (x-a)^{n-1}, ..., (x-a), 1 where the x-action is J_n(a).
class SingleBlockModule {
 public:
  /// Validates (J_n(a), b); throws ValidationError / ShapeError.
  static SingleBlockModule from_matrix(const Rational& a, QMatrix b);

  std::size_t dim() const noexcept { return b_.rows(); }
  const Rational& eigenvalue() const noexcept { return a_; }
  const QMatrix& operator_matrix() const noexcept { return b_; }
  /// (b_{1n}, ..., b_{n-1,n}).
  Vector last_column() const;
  /// Coordinates of p(1): the full n-th column, last entry 0.
  Vector psi() const { return b_.column(dim() - 1); }
  RBModule to_module() const;

  friend bool operator==(const SingleBlockModule&, const SingleBlockModule&) = default;

 private:
  SingleBlockModule(Rational a, QMatrix b) : a_(std::move(a)), b_(std::move(b)) {}
  Rational a_;
  QMatrix b_;
};

/// Rebuilds B from its last column band by band, nearest the diagonal first.
/// Throws DegenerateColumnError when some 1 + b_{j,j+1} vanishes, which for a
/// depth-one column means b_{n-1,n} is one of -1, -1/2, ..., -1/(n-2).
SingleBlockModule construct_from_last_column(std::size_t n, const Rational& a, std::span<const Rational> last);

/// Smallest i >= 1 with psi(n - i) != 0 (1-based), or n for the zero column.
std::size_t depth(std::span<const Rational> psi);

/// 1-based last-column positions fixed by every conjugation in G_n, for a
/// module of the given depth. Empty for depth n.
std::vector<std::size_t> invariant_positions(std::size_t n, std::size_t depth);

enum class CanonicalTag { Zero, Depth1, MidDepth, Center };
std::string to_string(CanonicalTag tag);

/// Complete isomorphism invariant of a single-block module (together with n
/// and a). kept holds last-column entries in increasing position:
///   Depth1   -> b_{n-1,n}
///   MidDepth -> b_{n-2i+1,n}, ..., b_{n-i,n}
///   Center   -> b_{1,n}, ..., b_{n-i,n}
///   Zero     -> nothing
struct CanonicalForm {
  CanonicalTag tag;
  std::size_t depth;
  Vector kept;

  /// The canonical last column (n-1 entries) for dimension n.
  Vector last_column(std::size_t n) const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalTag tag_for_depth(std::size_t n, std::size_t depth);

struct Canonicalization {
  CanonicalForm form;
  SingleBlockModule canonical;
  /// S^-1 B_input S = B_canonical.
  StabilizerElement witness;
};

Canonicalization canonicalize(const SingleBlockModule& m);

/// S in G_n with S * from = to * S, if any (S is then a module map from the
/// `from` structure to the `to` structure).
std::optional<StabilizerElement> find_stabilizer_intertwiner(const QMatrix& from, const QMatrix& to);

/// S^-1 B S.
SingleBlockModule conjugate(const SingleBlockModule& m, const StabilizerElement& s);

/// Same n, same a, same canonical form. Cross-checked against
/// find_stabilizer_intertwiner; disagreement raises ConsistencyError.
bool single_block_isomorphic(const SingleBlockModule& m1, const SingleBlockModule& m2);
/// A module isomorphism m1 -> m2 from G_n, if the modules are isomorphic.
std::optional<StabilizerElement> single_block_isomorphism(const SingleBlockModule& m1, const SingleBlockModule& m2);

struct CanonicalTemplate {
  CanonicalTag tag;
  std::size_t depth;
  std::vector<std::string> psi;  // n symbolic entries
  std::string constraint;        // empty when none
};

/// Canonical families for dimension n, by increasing depth (Zero last).
std::vector<CanonicalTemplate> enumerate_canonical(std::size_t n);

struct SquareZeroClassification {
  std::size_t ell;  // number of (M_2, p_2) summands
  /// Columns: n - 2*ell kernel vectors, then pairs (B w, w).
  QMatrix basis;
  /// The module in that basis: A unchanged (scalar), B block-diagonal with
  /// zeros then ell copies of [[0,1],[0,0]].
  RBModule normal_form;
};

/// For scalar A = aI: B^2 = 0, ell = rank B, and
/// M = (k,0)^{n-2 ell} + (M_2,p_2)^{ell}. Throws PreconditionError if A is not
/// scalar.
SquareZeroClassification square_zero_classify(const RBModule& m);

}  // namespace rbmod
