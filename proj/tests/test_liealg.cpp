#include <random>

#include "doctest.h"
#include "gradedlie/error.hpp"
#include "gradedlie/liealg.hpp"

using namespace gradedlie;

namespace {

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t expected_dim(LieType t, int l) {
  switch (t) {
    case LieType::A: return l * l + 2 * l;
    case LieType::B:
    case LieType::C: return l * (2 * l + 1);
    case LieType::D: return l * (2 * l - 1);
  }
  return 0;
}

Matrix sigma(std::size_t l) {
  Matrix s(2 * l, 2 * l);
  for (std::size_t i = 0; i < 2 * l; ++i) s(i, i) = i < l ? 1 : -1;
  return s;
}

}  // namespace

TEST_CASE("bracket examples") {
  Matrix e12 = matrix_unit(2, 0, 1), e21 = matrix_unit(2, 1, 0);
  CHECK(bracket(e12, e21) == Matrix{{1, 0}, {0, -1}});
  Matrix x{{1, 2}, {3, 4}};
  CHECK(bracket(x, x).is_zero());
  Matrix h{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
  CHECK(bracket(h, matrix_unit(3, 0, 1)) == matrix_unit(3, 0, 1) * Rational(2));
  CHECK_THROWS_AS(bracket(Matrix(2, 2), Matrix(3, 3)), InvalidInput);
}

TEST_CASE("antitranspose reflects across the anti-diagonal") {
  Matrix x{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(antitranspose(x) == Matrix{{9, 6, 3}, {8, 5, 2}, {7, 4, 1}});
  CHECK(antitranspose(antitranspose(x)) == x);
}

TEST_CASE("dimensions, independence and shape of every realization") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int l = min_rank(t); l <= 5; ++l) {
      CAPTURE(to_char(t));
      CAPTURE(l);
      auto alg = realize(t, l);
      CHECK(alg.dim() == expected_dim(t, l));
      CHECK(alg.dim() == alg.root_system().root_count() + std::size_t(l));
      const std::size_t n = alg.matrix_size();
      Matrix flat(0, n * n);
      for (const auto& b : alg.basis()) {
        flat.append_row(b.matrix.entries());
        const Matrix& x = b.matrix;
        // Defining conditions checked directly, not through contains().
        switch (t) {
          case LieType::A: {
            Rational tr = 0;
            for (std::size_t i = 0; i < n; ++i) tr += x(i, i);
            CHECK(tr == 0);
            break;
          }
          case LieType::B:
          case LieType::D: CHECK(antitranspose(x) == x * Rational(-1)); break;
          case LieType::C: {
            Matrix s = sigma(l);
            CHECK(antitranspose(x) == s * x * s * Rational(-1));
            break;
          }
        }
        CHECK(alg.contains(x));
      }
      CHECK(rank(flat) == alg.dim());
    }
}

TEST_CASE("C realization has the block shape X(A,B,C) with B=B', C=C'") {
  auto alg = realize(LieType::C, 3);
  for (const auto& b : alg.basis()) {
    const Matrix& x = b.matrix;
    Matrix blk_b(3, 3), blk_c(3, 3), blk_a(3, 3), blk_d(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        blk_a(i, j) = x(i, j);
        blk_b(i, j) = x(i, j + 3);
        blk_c(i, j) = x(i + 3, j);
        blk_d(i, j) = x(i + 3, j + 3);
      }
    CHECK(antitranspose(blk_b) == blk_b);
    CHECK(antitranspose(blk_c) == blk_c);
    CHECK(blk_d == antitranspose(blk_a) * Rational(-1));
  }
  CHECK(alg.dim() == 21);
}

TEST_CASE("root vectors are eigenvectors of the Cartan elements") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int l = min_rank(t); l <= 4; ++l) {
      auto alg = realize(t, l);
      const auto& rs = alg.root_system();
      for (int j = 0; j < l; ++j) {
        const Matrix& h = alg.basis()[j].matrix;
        const auto& aj = rs.simple_roots()[j];
        for (std::size_t r = 0; r < rs.root_count(); ++r) {
          const auto& lam = rs.roots()[r].lambda;
          Rational eig(2 * dot(lam, aj), dot(aj, aj));
          eig.canonicalize();
          const Matrix& e = alg.basis()[alg.root_basis_index(r)].matrix;
          CHECK(bracket(h, e) == e * eig);
          CHECK(eig.get_den() == 1);
        }
      }
    }
}

TEST_CASE("coordinates") {
  auto alg = realize(LieType::A, 2);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Vector unit(alg.dim());
    unit[i] = 1;
    CHECK(alg.coordinates(alg.basis()[i].matrix) == unit);
  }
  CHECK(is_zero(alg.coordinates(Matrix(3, 3))));
  // [e_1, f_1] lands in the Cartan part.
  const auto& rs = alg.root_system();
  auto pos = *rs.find_coeffs({1, 0});
  auto neg = *rs.find_coeffs({-1, 0});
  Matrix c = bracket(alg.basis()[alg.root_basis_index(pos)].matrix, alg.basis()[alg.root_basis_index(neg)].matrix);
  Vector v = alg.coordinates(c);
  for (std::size_t i = 2; i < v.size(); ++i) CHECK(v[i] == 0);
  CHECK(alg.element(v) == c);
  CHECK_THROWS_AS(alg.coordinates(Matrix::identity(3)), InvariantViolation);
}

TEST_CASE("structure constants: integral, antisymmetric, Jacobi at rank <= 3") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int l = min_rank(t); l <= 3; ++l) {
      auto alg = realize(t, l);
      const auto& sc = alg.structure_constants();
      CHECK(sc.all_integral());
      CHECK_FALSE(sc.antisymmetry_failure());
      CHECK_FALSE(sc.jacobi_failure());
    }
}

TEST_CASE("structure constants agree with matrix brackets; Jacobi on random triples at rank 5-6") {
  std::mt19937 rng(7);
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int l = 5; l <= 6; ++l) {
      auto alg = realize(t, l);
      const auto& sc = alg.structure_constants();
      CHECK(sc.all_integral());
      std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
      for (int s = 0; s < 60; ++s) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        CHECK(sc.jacobi_holds(i, j, k));
        CHECK(alg.element(sc.bracket_basis(i, j)) == bracket(alg.basis()[i].matrix, alg.basis()[j].matrix));
      }
    }
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(realize(LieType::B, 1), InvalidInput);
  CHECK_THROWS_AS(realize(LieType::A, 0), InvalidInput);
}
