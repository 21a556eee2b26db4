#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rbmod/errors.hpp"
#include "rbmod/module.hpp"
#include "support.hpp"

using namespace rbmod;

namespace {

const QMatrix kA33{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}};
const QMatrix kB33{{1, 0, 1}, {0, 0, 1}, {-1, 0, -1}};

RBModule zero_module(std::size_t n) { return verify(QMatrix(n, n), QMatrix(n, n)); }
RBModule m2p2() { return verify(QMatrix(2, 2), QMatrix{{0, 1}, {0, 0}}); }

}  // namespace

TEST_CASE("integral") {
  for (std::size_t m = 0; m <= 5; ++m)
    CHECK(integral(UniPoly::monomial(1, m)) == UniPoly::monomial(Rational(1, static_cast<long>(m + 1)), m + 1));
  CHECK(integral(UniPoly()).is_zero());
  CHECK(integral(UniPoly({3, 2})) == UniPoly({0, 3, 1}));
  CHECK(IntegralOperator{}(UniPoly::constant(1)) == UniPoly::monomial(1, 1));
}

TEST_CASE("Rota-Baxter axiom") {
  CHECK(check_rota_baxter_axiom(UniPoly::monomial(1, 1), UniPoly::monomial(1, 1)));
  CHECK(check_rota_baxter_axiom(UniPoly::constant(1), UniPoly::constant(1)));
  CHECK(check_rota_baxter_axiom(UniPoly::monomial(1, 2), UniPoly::monomial(1, 3)));
  CHECK(check_rota_baxter_axiom(UniPoly({1, -2, Rational(3, 5)}), UniPoly({0, 7, 0, -1})));
}

TEST_CASE("verify") {
  const RBModule m = verify(kA33, kB33);
  CHECK(m.dim() == 3);
  CHECK(nilpotency_index(m) == 3);
  CHECK_FALSE((kB33 * kB33).is_zero());

  CHECK_NOTHROW(verify(QMatrix{{1, 2}, {3, 4}}, QMatrix(2, 2)));
  try {
    verify(QMatrix(2, 2), QMatrix{{0, 1}, {1, 0}});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 1);
  }
  CHECK_THROWS_AS(verify(QMatrix(2, 2), QMatrix(3, 3)), ShapeError);
  CHECK_THROWS_AS(verify(QMatrix(2, 3), QMatrix(2, 3)), ShapeError);

  // A = [[0,c],[0,0]], B = [[0,b],[0,0]]: valid, index 2 when b != 0.
  const RBModule n2 = verify(QMatrix{{0, 7}, {0, 0}}, QMatrix{{0, 3}, {0, 0}});
  CHECK(nilpotency_index(n2) == 2);
  // With A = 0 the identity says B^2 = 0, which J_3 violates.
  CHECK_THROWS_AS(verify(QMatrix(3, 3), QMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), ValidationError);
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency_index(zero_module(3)) == 1);
  CHECK(nilpotency_index(m2p2()) == 2);
}

TEST_CASE("direct_sum") {
  const std::vector<RBModule> two{zero_module(1), zero_module(1)};
  CHECK(direct_sum(two) == zero_module(2));
  const std::vector<RBModule> mixed{m2p2(), zero_module(1)};
  const RBModule s = direct_sum(mixed);
  CHECK(s.x_action().is_zero());
  CHECK(s.operator_matrix() == QMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  const std::vector<RBModule> one{verify(kA33, kB33)};
  CHECK(direct_sum(one) == verify(kA33, kB33));
}

TEST_CASE("hom_space") {
  auto h = hom_space(zero_module(1), zero_module(1));
  REQUIRE(h.size() == 1);
  CHECK(h[0] == QMatrix{{1}});

  // (k,0) -> (M_2,p_2): Phi must land in ker B_2 = span(e1).
  h = hom_space(zero_module(1), m2p2());
  REQUIRE(h.size() == 1);
  CHECK(h[0] == QMatrix{{1}, {0}});

  const RBModule m1 = verify(QMatrix{{1}}, QMatrix(1, 1));
  const RBModule m2 = verify(QMatrix{{2, 0}, {0, 3}}, QMatrix(2, 2));
  CHECK(hom_space(m1, m2).empty());

  for (const QMatrix& phi : hom_space(verify(kA33, kB33), verify(kA33, kB33))) {
    CHECK(phi * kA33 == kA33 * phi);
    CHECK(phi * kB33 == kB33 * phi);
  }
}

TEST_CASE("is_isomorphic") {
  const RBModule m = verify(kA33, kB33);
  CHECK(is_isomorphic(m, m));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const QMatrix s = rbtest::random_invertible(rng, 3);
    const RBModule c = conjugate(m, s);
    auto phi = find_isomorphism(m, c);
    REQUIRE(phi.has_value());
    CHECK(rbtest::is_intertwiner(*phi, m, c));
  }
  CHECK_FALSE(is_isomorphic(zero_module(2), m2p2()));
  CHECK_FALSE(is_isomorphic(zero_module(2), zero_module(3)));
  const RBModule d1 = verify(QMatrix{{1, 0}, {0, 2}}, QMatrix(2, 2));
  const RBModule d2 = verify(QMatrix{{1, 0}, {0, 3}}, QMatrix(2, 2));
  CHECK_FALSE(is_isomorphic(d1, d2));
}

TEST_CASE("isomorphism over a large hom space") {
  // A = 0, B = 0 in dimension 4: the hom space is all of M_4 (d = 16), well
  // past the exhaustive grid, so the random probes decide.
  const RBModule z = zero_module(4);
  std::mt19937_64 rng(5);
  const RBModule c = conjugate(z, rbtest::random_invertible(rng, 4));
  auto phi = find_isomorphism(z, c);
  REQUIRE(phi.has_value());
  CHECK(rbtest::is_intertwiner(*phi, z, c));

  const std::vector<RBModule> parts{m2p2(), zero_module(2)};
  const std::vector<RBModule> parts2{m2p2(), m2p2()};
  CHECK_FALSE(is_isomorphic(direct_sum(parts), direct_sum(parts2)));
  CHECK(is_isomorphic(direct_sum(parts2), conjugate(direct_sum(parts2), rbtest::random_invertible(rng, 4))));
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(verify(QMatrix{{0, 2}, {1, 0}}, QMatrix(2, 2))) == Decision::Yes);
  CHECK(is_irreducible(verify(QMatrix{{0, 1}, {0, 0}}, QMatrix(2, 2))) == Decision::No);
  CHECK(is_irreducible(verify(kA33, kB33)) == Decision::No);
  CHECK(is_irreducible(zero_module(1)) == Decision::Yes);
  // companion of x^4 + 1
  const QMatrix c4{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  CHECK(is_irreducible(verify(c4, QMatrix(4, 4))) == Decision::Undecided);
  // companion of (x^2 + 1)^2 = x^4 + 2x^2 + 1: not squarefree, so reducible
  const QMatrix c5{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, -2}, {0, 0, 1, 0}};
  CHECK(is_irreducible(verify(c5, QMatrix(4, 4))) == Decision::No);
}

TEST_CASE("is_semisimple") {
  CHECK(is_semisimple(verify(QMatrix::diagonal({1, 2}), QMatrix(2, 2))));
  CHECK_FALSE(is_semisimple(verify(QMatrix{{0, 1}, {0, 0}}, QMatrix(2, 2))));
  CHECK_FALSE(is_semisimple(m2p2()));
  CHECK(is_semisimple(verify(QMatrix{{0, 2}, {1, 0}}, QMatrix(2, 2))));
}

TEST_CASE("distinct eigenvalues force B = 0") {
  // AB - BA = B^2 with A diagonal and distinct entries: B can only be 0.
  const QMatrix a = QMatrix::diagonal({1, 2, 3});
  const RBModule m = verify(a, QMatrix(3, 3));
  CHECK(hom_space(m, m).size() == 3);
  CHECK_THROWS_AS(verify(a, QMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), ValidationError);
}
