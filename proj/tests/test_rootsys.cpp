#include <set>

#include "doctest.h"
#include "gradedlie/error.hpp"
#include "gradedlie/rootsys.hpp"

using namespace gradedlie;

namespace {

// Roots characterized by their λ-vectors, independent of the generator:
// A: sum 0, squared norm 2; B: norm 1 or 2 with unit entries; C: norm 2
// with unit entries, or ±2λ_i; D: norm 2 with unit entries.
std::set<std::vector<int>> roots_by_norm(LieType t, int l) {
  const int d = t == LieType::A ? l + 1 : l;
  std::set<std::vector<int>> out;
  std::vector<int> v(d, -2);
  while (true) {
    int norm = 0, sum = 0, big = 0;
    for (int x : v) {
      norm += x * x;
      sum += x;
      big += (x == 2 || x == -2);
    }
    bool keep = false;
    switch (t) {
      case LieType::A: keep = !big && sum == 0 && norm == 2; break;
      case LieType::B: keep = !big && (norm == 1 || norm == 2); break;
      case LieType::C: keep = (!big && norm == 2) || (big == 1 && norm == 4); break;
      case LieType::D: keep = !big && norm == 2; break;
    }
    if (keep) out.insert(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == 2) v[i++] = -2;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(build_root_system(LieType::A, 2).root_count() == 6);
  CHECK(build_root_system(LieType::C, 2).root_count() == 8);
  CHECK(build_root_system(LieType::B, 3).root_count() == 18);
  for (int l = 1; l <= 6; ++l) CHECK(build_root_system(LieType::A, l).root_count() == std::size_t(l * (l + 1)));
  for (int l = 2; l <= 6; ++l) {
    CHECK(build_root_system(LieType::B, l).root_count() == std::size_t(2 * l * l));
    CHECK(build_root_system(LieType::C, l).root_count() == std::size_t(2 * l * l));
  }
  for (int l = 3; l <= 6; ++l) CHECK(build_root_system(LieType::D, l).root_count() == std::size_t(2 * l * (l - 1)));
}

TEST_CASE("roots agree with the norm characterization and expansions reproduce λ") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int l = min_rank(t); l <= 5; ++l) {
      auto rs = build_root_system(t, l);
      std::set<std::vector<int>> got;
      for (const auto& r : rs.roots()) {
        got.insert(r.lambda);
        CHECK(rs.lambda_of(r.coeffs) == r.lambda);
      }
      CHECK(got == roots_by_norm(t, l));
      for (const auto& r : rs.positive_roots())
        for (int c : r.coeffs) CHECK(c >= 0);
    }
}

TEST_CASE("simple root conventions") {
  auto c = build_root_system(LieType::C, 3);
  CHECK(c.simple_roots()[2] == std::vector<int>{0, 0, 2});
  auto b = build_root_system(LieType::B, 3);
  CHECK(b.simple_roots()[2] == std::vector<int>{0, 0, 1});
  auto d = build_root_system(LieType::D, 4);
  CHECK(d.simple_roots()[3] == std::vector<int>{0, 0, 1, 1});
  auto a = build_root_system(LieType::A, 2);
  CHECK(a.simple_roots()[0] == std::vector<int>{1, -1, 0});
  CHECK_THROWS_AS(build_root_system(LieType::D, 2), InvalidInput);
  CHECK_THROWS_AS(build_root_system(LieType::A, 0), InvalidInput);
}

TEST_CASE("degree of roots") {
  auto a2 = build_root_system(LieType::A, 2);
  CHECK(degree_of_root(a2, a2.lambda_of({1, 1}), MarkedSet({1})) == 1);
  auto c2 = build_root_system(LieType::C, 2);
  CHECK(degree_of_root(c2, c2.lambda_of({2, 1}), MarkedSet({1, 2})) == 3);
  auto a3 = build_root_system(LieType::A, 3);
  CHECK(degree_of_root(a3, a3.lambda_of({0, 1, 0}), MarkedSet({1, 3})) == 0);
  CHECK(degree_of_root(a3, a3.lambda_of({0, -1, -1}), MarkedSet({3})) == -1);
  CHECK_THROWS_AS(degree_of_root(a3, {2, 0, 0, -2}, MarkedSet({1})), InvalidInput);
}

TEST_CASE("degree is additive and the highest root is highest") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int l = min_rank(t); l <= 5; ++l) {
      auto rs = build_root_system(t, l);
      CHECK(rs.positive_roots().size() * 2 == rs.root_count());
      for (const auto& s : all_marked_sets(l)) {
        int top = degree_of_root(rs.highest_root(), s);
        for (const auto& a : rs.roots()) {
          CHECK(degree_of_root(-a, s) == -degree_of_root(a, s));
          CHECK(degree_of_root(a, s) <= top);
          for (const auto& b : rs.roots()) {
            std::vector<int> sum(a.coeffs.size());
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.coeffs[i] + b.coeffs[i];
            if (auto k = rs.find_coeffs(sum))
              CHECK(degree_of_root(rs.roots()[*k], s) == degree_of_root(a, s) + degree_of_root(b, s));
          }
        }
      }
    }
}

TEST_CASE("marked sets") {
  CHECK(MarkedSet::parse("3,1").to_string() == "1,3");
  CHECK_THROWS_AS(MarkedSet::parse("1,1"), InvalidInput);
  CHECK_THROWS_AS(MarkedSet::parse(""), InvalidInput);
  CHECK_THROWS_AS(MarkedSet::parse("1,x"), InvalidInput);
  CHECK_THROWS_AS(MarkedSet::parse("0"), InvalidInput);
  CHECK_THROWS_AS(MarkedSet({4}).validate(3), InvalidInput);
  CHECK(all_marked_sets(3).size() == 7);
}

TEST_CASE("diagram automorphism orbits") {
  CHECK(diagram_automorphism_orbit(LieType::A, 4, MarkedSet({3, 4})) == MarkedSet({1, 2}));
  CHECK(diagram_automorphism_orbit(LieType::A, 4, MarkedSet({2, 3})) == MarkedSet({2, 3}));
  CHECK(diagram_automorphism_orbit(LieType::C, 3, MarkedSet({2})) == MarkedSet({2}));
  CHECK(diagram_automorphism_orbit(LieType::D, 4, MarkedSet({4})) == MarkedSet({3}));
  CHECK(diagram_automorphism_orbit(LieType::D, 5, MarkedSet({1, 5})) == MarkedSet({1, 4}));
}
