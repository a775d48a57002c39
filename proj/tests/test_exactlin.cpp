#include <random>

#include "doctest.h"
#include "gradedlie/exactlin.hpp"

using namespace gradedlie;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Low-rank product so kernels are nontrivial.
Matrix random_low_rank(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(rng, r, k, -3, 3) * random_matrix(rng, k, c, -3, 3);
}

}  // namespace

TEST_CASE("rational rendering and parsing") {
  Rational a(6, 4), b(-4, 2);
  a.canonicalize();
  b.canonicalize();
  CHECK(to_string(a) == "3/2");
  CHECK(to_string(b) == "-2");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  Rational q(10, -4);
  q.canonicalize();
  CHECK(q.get_den() == 2);
  CHECK(q.get_num() == -5);
}

TEST_CASE("rref small cases") {
  auto r = rref(Matrix::identity(2));
  CHECK(r.rank == 2);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  auto p = rref(Matrix{{0, 1}, {1, 0}});
  CHECK(p.rank == 2);
  CHECK(p.reduced == Matrix::identity(2));
}

TEST_CASE("kernel small cases") {
  CHECK(kernel_basis(Matrix(3, 3)).dim() == 3);
  CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
  auto k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vector{1, -1}));
}

TEST_CASE("intersect small cases") {
  const std::size_t a01[] = {0, 1}, a12[] = {1, 2}, a0[] = {0}, a1[] = {1};
  auto a = Subspace::coordinate(3, a01);
  auto b = Subspace::coordinate(3, a12);
  CHECK(intersect(a, b) == Subspace::coordinate(3, a1));
  CHECK(intersect(a, a) == a);
  CHECK(intersect(Subspace::coordinate(3, a0), Subspace::coordinate(3, a1)).dim() == 0);
  CHECK_THROWS(intersect(a, Subspace(4)));
}

TEST_CASE("rank plus nullity equals columns; rref is idempotent") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = 1 + rng() % 4;
    Matrix m = random_low_rank(rng, r, c, k);
    auto red = rref(m);
    auto ker = kernel_basis(m);
    CHECK(red.rank + ker.dim() == c);
    CHECK(rref(red.reduced).reduced == red.reduced);
    for (std::size_t i = 0; i < ker.dim(); ++i) CHECK(is_zero(m * ker.basis().row(i)));
  }
}

TEST_CASE("canonical form is independent of the spanning set") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + rng() % 6, k = 1 + rng() % n;
    Matrix gens = random_matrix(rng, k, n, -4, 4);
    Subspace s = Subspace::span(gens);
    // Invertible unit-triangular change of basis plus an extra redundant row.
    Matrix change = Matrix::identity(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) change(i, j) = static_cast<int>(rng() % 7) - 3;
    Matrix other = change * gens;
    Matrix extra = random_matrix(rng, 1, k, -2, 2) * gens;
    other.append_row(extra.row(0));
    Subspace s2 = Subspace::span(other);
    CHECK(s == s2);
    CHECK(s.basis() == s2.basis());
  }
}

TEST_CASE("intersection dimension formula on random subspaces") {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + rng() % 6;
    Subspace a = Subspace::span(random_low_rank(rng, 1 + rng() % n, n, 1 + rng() % n));
    Subspace b = Subspace::span(random_low_rank(rng, 1 + rng() % n, n, 1 + rng() % n));
    Subspace i = intersect(a, b);
    CHECK(i.dim() + sum(a, b).dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("solve and coordinates") {
  Matrix a{{1, 2}, {3, 4}};
  Vector b{5, 6};
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}));
  Subspace s = Subspace::span(Matrix{{1, 1, 0}, {0, 1, 1}});
  auto c = s.coordinates(Vector{2, 3, 1});
  REQUIRE(c);
  Vector back(3);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[i] * s.basis()(i, j);
  CHECK(back == Vector{2, 3, 1});
  CHECK_FALSE(s.coordinates(Vector{1, 0, 0}));
}
