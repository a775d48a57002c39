#include "doctest.h"
#include "gradedlie/classify.hpp"
#include "gradedlie/error.hpp"

using namespace gradedlie;

namespace {

ClassificationRecord cls(LieType t, int l, std::vector<int> s) { return classify(t, l, MarkedSet(std::move(s))); }

}  // namespace

TEST_CASE("verdict examples") {
  CHECK(cls(LieType::A, 2, {1}).verdict == Verdict::Excluded);
  CHECK(cls(LieType::A, 3, {3}).verdict == Verdict::Excluded);
  CHECK(cls(LieType::C, 2, {1}).verdict == Verdict::Excluded);
  CHECK(cls(LieType::A, 3, {2}).verdict == Verdict::TypeII);
  CHECK(cls(LieType::A, 4, {1, 3}).verdict == Verdict::TypeIII);
  CHECK(cls(LieType::A, 4, {2, 4}).verdict == Verdict::TypeIII);  // mirror of {1,3}
  CHECK(cls(LieType::C, 3, {2}).verdict == Verdict::TypeI);
  CHECK(cls(LieType::C, 3, {1, 3}).verdict == Verdict::TypeIII);
  CHECK(cls(LieType::C, 3, {1, 2}).verdict == Verdict::TypeI);
  CHECK(cls(LieType::B, 3, {2}).verdict == Verdict::TypeII);  // contact
  CHECK(cls(LieType::D, 4, {1}).verdict == Verdict::TypeII);
}

TEST_CASE("(A_l,{1,l}) is contact and type III") {
  for (int l = 2; l <= 5; ++l) {
    const auto r = cls(LieType::A, l, {1, l});
    CHECK(r.contact);
    CHECK(r.verdict == Verdict::TypeIII);
  }
}

TEST_CASE("low-rank coincidences") {
  CHECK(canonical_class(LieType::B, 2, MarkedSet({2})) == GradationLabel{"C", 2, MarkedSet({1})});
  CHECK(canonical_class(LieType::B, 2, MarkedSet({1})) == GradationLabel{"C", 2, MarkedSet({2})});
  CHECK(canonical_class(LieType::D, 3, MarkedSet({1})) == GradationLabel{"A", 3, MarkedSet({2})});
  CHECK(canonical_class(LieType::D, 3, MarkedSet({3})) == GradationLabel{"A", 3, MarkedSet({1})});
  CHECK(cls(LieType::B, 2, {2}).verdict == Verdict::Excluded);
  // Isomorphic algebras have equal graded dimensions.
  CHECK(graded_dims(LieType::B, 2, MarkedSet({2})) == graded_dims(LieType::C, 2, MarkedSet({1})));
  CHECK(graded_dims(LieType::D, 3, MarkedSet({1})) == graded_dims(LieType::A, 3, MarkedSet({2})));
  CHECK(graded_dims(LieType::D, 3, MarkedSet({2, 3})) == graded_dims(LieType::A, 3, MarkedSet({1, 3})));
}

TEST_CASE("record invariants over the rank 5 sweep") {
  const auto keys = all_gradations(5);
  CHECK(keys.size() == 215);
  for (const auto& k : keys) {
    const auto r = classify(k.type, k.rank, k.delta1);
    CAPTURE(r.canonical.to_string());
    // contact ⟺ depth 2 and dim g_-2 = 1.
    CHECK(r.contact == (r.depth == 2 && r.dims.at(-2) == 1));
    const bool excl = (r.canonical.type == "A" || r.canonical.type == "C") && r.canonical.delta1 == MarkedSet({1});
    CHECK((r.verdict == Verdict::Excluded) == excl);
    for (const auto& [deg, d] : r.dims) CHECK(d == r.dims.at(-deg));
    // Invariant under the diagram automorphism.
    const auto image = diagram_automorphism_orbit(k.type, k.rank, k.delta1);
    CHECK(classify(k.type, k.rank, image).verdict == r.verdict);
    if (r.vmrt) CHECK(static_cast<std::size_t>(r.vmrt->dim) + 1 <= r.dims.at(-1));
  }
}

TEST_CASE("exceptional automorphism rows") {
  CHECK(exceptional_aut(LieType::C, 2, MarkedSet({1})) == GradationLabel{"A", 3, MarkedSet({1})});
  CHECK(exceptional_aut(LieType::B, 3, MarkedSet({3})) == GradationLabel{"D", 4, MarkedSet({4})});
  CHECK_FALSE(exceptional_aut(LieType::A, 3, MarkedSet({2})));
  CHECK_FALSE(exceptional_aut(LieType::B, 2, MarkedSet({2})));
  const auto table = exceptional_aut_table(6);
  CHECK(table.size() == 5 + 4 + 1);
  CHECK_FALSE(table.back().computed);
  // Graded dimensions agree across every computed row.
  for (const auto& row : table) {
    if (!row.computed) continue;
    const auto s = graded_dims(parse_lie_type(row.source.type), row.source.rank, row.source.delta1);
    const auto t = graded_dims(parse_lie_type(row.target.type), row.target.rank, row.target.delta1);
    CHECK(s.at(-1) + (s.count(-2) ? s.at(-2) : 0) == t.at(-1));
  }
}

TEST_CASE("VMRT models") {
  auto v = vmrt_model(LieType::A, 3, MarkedSet({2}));
  REQUIRE(v);
  CHECK(v->model == "P^1xP^1");
  CHECK(v->dim == 2);
  v = vmrt_model(LieType::A, 4, MarkedSet({1}));
  REQUIRE(v);
  CHECK(v->model == "P(T)");
  CHECK(v->dim == 3);
  v = vmrt_model(LieType::B, 3, MarkedSet({2}));
  REQUIRE(v);
  CHECK(v->model == "P^1xQ^1");
  CHECK(v->dim == 2);
  CHECK(graded_dims(LieType::B, 3, MarkedSet({2})).at(-1) == 6);
  v = vmrt_model(LieType::D, 5, MarkedSet({2}));
  REQUIRE(v);
  CHECK(v->dim == 5);
  CHECK_FALSE(vmrt_model(LieType::C, 3, MarkedSet({2})));
  CHECK_FALSE(vmrt_model(LieType::A, 3, MarkedSet({1, 2})));
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(cls(LieType::A, 0, {1}), InvalidInput);
  CHECK_THROWS_AS(cls(LieType::D, 2, {1}), InvalidInput);
  CHECK_THROWS_AS(cls(LieType::A, 3, {4}), InvalidInput);
}

TEST_CASE("tower comparison on a few cases") {
  auto cmp = [](LieType t, int l, std::vector<int> s) {
    return compare_with_tower(grade(realize(t, l), MarkedSet(std::move(s))));
  };
  CHECK(cmp(LieType::C, 3, {2}).reproduces_g);
  CHECK(cmp(LieType::A, 3, {1, 2, 3}).reproduces_g);
  const auto a32 = cmp(LieType::A, 3, {2});
  CHECK_FALSE(a32.reproduces_g);
  REQUIRE(a32.first_excess);
  CHECK(*a32.first_excess == 0);
  const auto capped = compare_with_tower(grade(realize(LieType::C, 3), MarkedSet({2})), 1);
  CHECK(capped.tower_dims.size() == 2);
}
