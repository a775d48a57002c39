#include <random>

#include "doctest.h"
#include "gradedlie/ecp2.hpp"
#include "gradedlie/error.hpp"

using namespace gradedlie;

TEST_CASE("polynomial arithmetic") {
  const auto x = Polynomial::var(0), y = Polynomial::var(1);
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.evaluate({3, 2, 0, 0}) == 5);
  CHECK(p.derivative(0) == Polynomial(2L) * x);
  CHECK(p.substitute({y, x, Polynomial::var(2), Polynomial::var(3)}) == -p);
  CHECK(Polynomial(Rational(0)).is_zero());
  CHECK_THROWS_AS(Polynomial::var(4), InvalidInput);
}

TEST_CASE("the two families") {
  const auto m1 = build_M(1), m2 = build_M(2);
  CHECK(m1.at(0, 0) == Matrix::identity(3));
  CHECK(m2.at(0, 0) == Matrix::identity(3));
  CHECK(m2.at(1, 0)(0, 2) == Rational(1, 2));
  const Matrix a = m1.at(2, 3);
  CHECK(a(0, 0) == 1);
  CHECK(a(0, 1) == 2);
  CHECK(a(0, 2) == 3);
  CHECK(determinant(m1) == Polynomial(1L));
  CHECK(determinant(m2) == Polynomial(1L));
  CHECK_THROWS_AS(build_M(3), InvalidInput);
}

TEST_CASE("homomorphism identity and its mutation") {
  CHECK(verify_homomorphism(build_M(1)));
  CHECK(verify_homomorphism(build_M(2)));
  CHECK_FALSE(verify_homomorphism(build_M2_with(1)));
  CHECK(inverse_is_negation(build_M(1)));
  CHECK(inverse_is_negation(build_M(2)));
  CHECK_FALSE(inverse_is_negation(build_M2_with(1)));
  // Numeric spot check of the symbolic identity.
  const auto m2 = build_M(2);
  CHECK(m2.at(1, 2) * m2.at(Rational(-3, 2), 5) == m2.at(Rational(-1, 2), 7));
}

TEST_CASE("open orbits") {
  const auto m1 = build_M(1), m2 = build_M(2);
  CHECK(open_orbit_rank(m1) == 2);
  CHECK(open_orbit_rank(m2) == 2);
  // The left action on columns never has a 2-dimensional orbit.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Vector> points{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 20; ++i) points.push_back({d(rng), d(rng), d(rng)});
  for (const auto& v : points) {
    if (is_zero(v)) continue;
    CHECK(orbit_rank(m1, OrbitAction::Left, v) < 2);
  }
  CHECK_THROWS_AS(orbit_rank(m1, OrbitAction::Left, Vector{0, 0, 0}), InvalidInput);
}

TEST_CASE("unipotent indices") {
  CHECK(unipotent_index(Matrix::identity(3)) == 1);
  CHECK(unipotent_index(build_M(1).at(1, 1)) == 2);
  const Matrix g = build_M(2).at(1, 0);
  const Matrix x = g - Matrix::identity(3);
  Matrix e13(3, 3);
  e13(0, 2) = 1;
  CHECK(x * x == e13);
  CHECK(unipotent_index(g) == 3);
  CHECK_THROWS_AS(unipotent_index(Matrix{{2, 0}, {0, 1}}), InvalidInput);

  const auto d = distinguish(build_M(1), build_M(2));
  CHECK(d.index1 == 2);
  CHECK(d.index2 == 3);
  CHECK(d.square_zero1);
  CHECK_FALSE(d.square_zero2);
  CHECK(d.distinct);
  CHECK_THROWS_AS(distinguish(build_M(1), build_M2_with(1)), InvalidInput);
}

TEST_CASE("unipotent index is a conjugation invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // Unit lower-triangular times unit upper-triangular: determinant 1.
    Matrix lo = Matrix::identity(3), up = Matrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lo(i, j) = d(rng);
        up(j, i) = d(rng);
      }
    const Matrix p = lo * up;
    // Inverse by solving p z = e_i.
    Matrix inv(3, 3);
    for (std::size_t c = 0; c < 3; ++c) {
      Vector e(3);
      e[c] = 1;
      auto z = solve(p, e);
      REQUIRE(z);
      for (std::size_t r = 0; r < 3; ++r) inv(r, c) = (*z)[r];
    }
    for (const auto& g : {build_M(1).at(d(rng), d(rng)), build_M(2).at(d(rng), d(rng))})
      CHECK(unipotent_index(p * g * inv) == unipotent_index(g));
  }
}

TEST_CASE("M1 sweeps out the first-row radical") {
  CHECK(image_in_first_row_radical(build_M(1)));
  CHECK_FALSE(image_in_first_row_radical(build_M(2)));
}
