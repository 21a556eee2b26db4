#include "support.hpp"

#include <string>
#include <utility>

#include "rbmod/errors.hpp"

namespace rbtest {

QMatrix residual(const QMatrix& b) {
  const std::size_t n = b.rows();
  QMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return rbmod::mat_mul(j, b) - rbmod::mat_mul(b, j) - rbmod::mat_mul(b, b);
}

OracleResult brute_force_operator(std::size_t n, std::span<const Rational> last) {
  QMatrix b(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) b(i, n - 1) = last[i];
  // 0-based: unknown (r, r + d) is fixed by residual entry (r, r + d + 1).
  for (std::size_t d = 1; d + 1 < n; ++d) {
    for (std::size_t r = n - d - 1; r-- > 0;) {
      b(r, r + d) = 0;
      const Rational at0 = residual(b)(r, r + d + 1);
      b(r, r + d) = 1;
      const Rational at1 = residual(b)(r, r + d + 1);
      const Rational slope = at1 - at0;
      if (slope.is_zero()) return {at0.is_zero() ? OracleStatus::Underdetermined : OracleStatus::NoSolution, b};
      b(r, r + d) = -at0 / slope;
    }
  }
  if (!residual(b).is_zero()) return {OracleStatus::NoSolution, b};
  return {OracleStatus::Solved, b};
}

Rational depth2_n5_alpha(const QMatrix& b) { return b(0, 4) / (b(2, 4) * b(2, 4)); }

Rational random_int(std::mt19937_64& rng, long lo, long hi) {
  return Rational(std::uniform_int_distribution<long>(lo, hi)(rng));
}

rbmod::SingleBlockModule random_single_block(std::mt19937_64& rng, std::size_t n, const Rational& a, long lo,
                                             long hi) {
  while (true) {
    Vector last;
    for (std::size_t k = 0; k + 1 < n; ++k) last.push_back(random_int(rng, lo, hi));
    try {
      return rbmod::construct_from_last_column(n, a, last);
    } catch (const rbmod::DegenerateColumnError&) {
    }
  }
}

rbmod::StabilizerElement random_stabilizer(std::mt19937_64& rng, std::size_t n) {
  Vector s{random_int(rng, 1, 3)};
  for (std::size_t k = 1; k < n; ++k) s.push_back(random_int(rng, -3, 3));
  return rbmod::StabilizerElement(std::move(s));
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  while (true) {
    QMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = random_int(rng, lo, hi);
    if (!rbmod::determinant(s).is_zero()) return s;
  }
}

rbmod::NCPoly rewrite_by_passes(const rbmod::NCPoly& f) {
  rbmod::NCPoly current = f;
  bool changed = true;
  while (changed) {
    changed = false;
    rbmod::NCPoly next;
    for (const auto& [w, c] : current.terms()) {
      const std::string& s = w.letters();
      const std::size_t pos = s.find("yx");
      if (pos == std::string::npos) {
        next.add_term(w, c);
        continue;
      }
      changed = true;
      std::string xy = s;
      std::swap(xy[pos], xy[pos + 1]);
      std::string yy = s;
      yy[pos + 1] = 'y';
      next.add_term(rbmod::NCWord(xy), c);
      next.add_term(rbmod::NCWord(yy), -c);
    }
    current = std::move(next);
  }
  return current;
}

bool is_intertwiner(const QMatrix& phi, const rbmod::RBModule& m1, const rbmod::RBModule& m2) {
  if (phi.rows() != m2.dim() || phi.cols() != m1.dim()) return false;
  if (rbmod::determinant(phi).is_zero()) return false;
  return phi * m1.x_action() == m2.x_action() * phi && phi * m1.operator_matrix() == m2.operator_matrix() * phi;
}

}  // namespace rbtest
