#include "doctest.h"
#include "gradedlie/embedj.hpp"
#include "gradedlie/error.hpp"
#include "gradedlie/liealg.hpp"

using namespace gradedlie;

TEST_CASE("tilde duplicates the center row and column") {
  const Matrix x = realize(LieType::B, 2).basis().back().matrix;
  const Matrix y = tilde(x);
  CHECK(y.rows() == 6);
  CHECK(tilde(Matrix(5, 5)).is_zero());
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == 2) continue;
    const std::size_t ti = i < 2 ? i : i + 1;
    CHECK(y(ti, 2) == x(i, 2));
    CHECK(y(ti, 3) == x(i, 2));
    CHECK(y(2, ti) == x(2, i));
    CHECK(y(3, ti) == x(2, i));
  }
  CHECK(y(2, 2) == 0);
  CHECK(y(2, 3) == 0);
  // Cartan elements have no center entries and map block by block.
  const Matrix h = realize(LieType::B, 3).basis()[0].matrix;
  const Matrix th = tilde(h);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      if (i != 3 && j != 3) CHECK(th(i < 3 ? i : i + 1, j < 3 ? j : j + 1) == h(i, j));
  CHECK_THROWS_AS(tilde(Matrix(4, 4)), InvalidInput);
}

TEST_CASE("the duplicated center is not a homomorphism; the isometric split is") {
  // Two center products: (XY)(0,0) picks up a_0 ξ_0 once, (X~Y~)(0,0) twice.
  const auto alg = realize(LieType::B, 2);
  Matrix x(5, 5), y(5, 5);
  x(0, 2) = 1;
  x(2, 4) = -1;
  y(2, 0) = 1;
  y(4, 2) = -1;
  REQUIRE(alg.contains(x));
  REQUIRE(alg.contains(y));
  CHECK_FALSE(tilde(bracket(x, y)) == bracket(tilde(x), tilde(y)));
  const auto iso = CenterSplit::Isometric;
  CHECK(tilde(bracket(x, y), iso) == bracket(tilde(x, iso), tilde(y, iso)));

  for (int l = 2; l <= 4; ++l) {
    const auto dup = embed_so(l);
    CHECK(dup.lands_in_target);
    CHECK(dup.injective);
    CHECK_FALSE(dup.homomorphism);
    const auto r = embed_so(l, iso);
    CHECK(r.homomorphism);
    CHECK(r.injective);
    CHECK(r.source_dim == static_cast<std::size_t>(l * (2 * l + 1)));
    CHECK(r.target_dim == static_cast<std::size_t>((l + 1) * (2 * l + 1)));
  }
}

TEST_CASE("parabolic compatible, nilradicals differ in dimension") {
  for (int l = 2; l <= 4; ++l) {
    for (auto split : {CenterSplit::Duplicate, CenterSplit::Isometric}) {
      const auto r = embed_so(l, split);
      CHECK(r.parabolic_compat);
      CHECK(r.dim_jp == r.dim_p_cap_jg);
      CHECK(r.dim_jn == static_cast<std::size_t>(2 * l - 1));
      CHECK(r.dim_n_target == static_cast<std::size_t>(2 * l));
      CHECK_FALSE(r.nilradical_match);
    }
    // The automorphism-table pair: equal dimensions, still not equal spaces.
    const auto r = embed_so(l, CenterSplit::Isometric, MarkedSet({l}), MarkedSet({l + 1}));
    CHECK(r.dim_jn == r.dim_n_target);
    CHECK(r.parabolic_compat);
    CHECK_FALSE(r.nilradical_match);
  }
}

TEST_CASE("sp(2l) inside sl(2l)") {
  for (int l = 2; l <= 4; ++l) {
    const auto r = embed_sp(l);
    CHECK(r.all_passed());
    CHECK(r.dim_m == static_cast<std::size_t>(2 * l - 1));
    CHECK(r.dim_m_target == r.dim_m);
    CHECK(r.corner_source_degree == 2);
    CHECK(r.corner_target_degree == 1);
  }
  CHECK_THROWS_AS(embed_sp(1), InvalidInput);
  CHECK_THROWS_AS(embed_so(1), InvalidInput);
}
