#include "gradedlie/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "gradedlie/classify.hpp"
#include "gradedlie/ecp2.hpp"
#include "gradedlie/embedj.hpp"
#include "gradedlie/error.hpp"
#include "gradedlie/grading.hpp"
#include "gradedlie/prolong.hpp"
#include "gradedlie/typeiii.hpp"

namespace gradedlie {

namespace {

// Wall-clock budgets in seconds.
constexpr double kSweepBudget = 60;
constexpr double kTowerBudget = 600;
constexpr double kLemmaBudget = 10;
constexpr double kEmbeddingBudget = 5;
constexpr double kP2Budget = 1;

/// Collects failures; the criterion passes when none were recorded.
struct Tally {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
  std::string summary(std::string ok_text) const {
    while (!ok_text.empty() && (ok_text.back() == ' ' || ok_text.back() == ';')) ok_text.pop_back();
    if (failures.empty()) return ok_text;
    std::ostringstream os;
    os << failures.size() << " failure(s): ";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) os << (i ? "; " : "") << failures[i];
    if (failures.size() > 5) os << "; ...";
    return os.str();
  }
};

CriterionResult timed(int id, std::string name, std::optional<double> budget,
                      const std::function<std::pair<bool, std::string>()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.budget_seconds = budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.within_budget()) {
    r.passed = false;
    r.detail += " (over budget)";
  }
  return r;
}

std::string label(const GradationKey& k) {
  return "(" + std::string(1, to_char(k.type)) + "," + std::to_string(k.rank) + ",{" + k.delta1.to_string() + "})";
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

GradedLieAlgebra graded(LieType t, int l, std::vector<int> marks) {
  return grade(std::make_shared<const MatrixLieAlgebra>(realize(t, l)), MarkedSet(std::move(marks)));
}

}  // namespace

AcceptanceOptions acceptance_options_for(int max_rank) {
  if (max_rank < 1) throw InvalidInput("max rank must be at least 1");
  if (max_rank > kHardMaxRank) throw InvalidInput("max rank above the hard cap of " + std::to_string(kHardMaxRank));
  AcceptanceOptions o;
  o.sweep_max_rank = std::min(o.sweep_max_rank, max_rank);
  o.tower_max_rank = std::min(o.tower_max_rank, max_rank);
  o.table_max_rank = std::min(o.table_max_rank, max_rank);
  if (max_rank > 5) o.sweep_max_rank = max_rank;
  return o;
}

CriterionResult criterion_gradation_sweep(const AcceptanceOptions& o) {
  return timed(1, "gradation sweep", kSweepBudget, [&] {
    Tally t;
    std::map<std::pair<LieType, int>, std::shared_ptr<const MatrixLieAlgebra>> cache;
    for (const auto& key : all_gradations(o.sweep_max_rank)) {
      auto& alg = cache[{key.type, key.rank}];
      if (!alg) alg = std::make_shared<const MatrixLieAlgebra>(realize(key.type, key.rank));
      try {
        const auto g = grade(alg, key.delta1);
        // m ⊕ p = g on coordinates, besides the matrix-level witness.
        const Subspace m = g.negative_part(), p = g.parabolic();
        t.expect(sum(m, p).dim() == alg->dim() && intersect(m, p).dim() == 0, label(key) + " m+p");
      } catch (const InvariantViolation& e) {
        t.fail(label(key) + ": " + e.what());
      }
      ++t.checked;
    }
    return std::pair{t.failures.empty(),
                     t.summary(std::to_string(all_gradations(o.sweep_max_rank).size()) + " gradations up to rank " +
                               std::to_string(o.sweep_max_rank) + ", all checks hold")};
  });
}

CriterionResult criterion_type1_oracle(const AcceptanceOptions& o) {
  return timed(2, "prolongation type-I oracle", kTowerBudget, [&] {
    Tally t;
    std::size_t n = 0, type1 = 0;
    for (const auto& key : all_gradations(o.tower_max_rank)) {
      const auto rec = classify(key.type, key.rank, key.delta1);
      const auto g = graded(key.type, key.rank, key.delta1.indices());
      const auto cmp = compare_with_tower(g);
      ++n;
      if (rec.verdict == Verdict::TypeI) {
        ++type1;
        t.expect(cmp.reproduces_g, label(key) + " TypeI but tower " + join(cmp.tower_dims));
      } else {
        const bool excess = cmp.first_excess && *cmp.first_excess <= rec.depth + 1;
        t.expect(!cmp.reproduces_g && excess, label(key) + " " + to_string(rec.verdict) + " without excess");
      }
    }
    return std::pair{t.failures.empty(), t.summary(std::to_string(n) + " gradations up to rank " +
                                                   std::to_string(o.tower_max_rank) + ", " + std::to_string(type1) +
                                                   " TypeI, verdicts agree with the tower")};
  });
}

CriterionResult criterion_exception_witnesses() {
  return timed(3, "exception witnesses", std::nullopt, [] {
    Tally t;
    std::ostringstream os;
    {
      const auto g = graded(LieType::A, 2, {1});
      ProlongationTower tower(symbol(g));
      tower.extend_to(1);
      const auto d0 = tower.level(0).dim(), d1 = tower.level(1).dim();
      t.expect(d0 == 4 && d1 == 6 && d1 > g.dim_part(1), "A2{1} levels " + join({d0, d1}));
      os << "A2{1}: g0(m)=" << d0 << " g1(m)=" << d1 << "; ";
    }
    {
      const auto g = graded(LieType::A, 3, {2});
      ProlongationTower tower(symbol(g));
      const auto r = restricted_prolong(tower, embedded_g0(g, tower), 2);
      const auto full1 = tower.level(1).dim();
      const auto d = r.dims();
      t.expect(full1 > 4, "A3{2} full g1 = " + std::to_string(full1));
      t.expect(d.at(1) == 4 && d.at(2) == 0, "A3{2} restricted " + join(d));
      os << "A3{2}: g1(m)=" << full1 << " restricted " << join(d) << "; ";
    }
    {
      const auto g = graded(LieType::A, 3, {1, 2});
      ProlongationTower tower(symbol(g));
      const auto cmp = compare_with_tower(g);
      t.expect(!cmp.reproduces_g, "A3{1,2} full tower does not exceed");
      const Subspace g0p = g0_preserving(tower, decompose(g));
      const int mu = g.depth();
      const auto r = restricted_prolong(tower, g0p, mu + 2);
      const auto d = r.dims();
      bool match = true;
      for (int k = 0; k <= mu + 2; ++k)
        match = match && d.at(static_cast<std::size_t>(k)) == (k <= mu ? g.dim_part(k) : 0);
      t.expect(match, "A3{1,2} restricted with g0' " + join(d));
      t.expect(g0p == embedded_g0(g, tower), "A3{1,2} g0' differs from iota(g0)");
      os << "A3{1,2}: full " << join(cmp.tower_dims) << ", restricted with g0' " << join(d);
    }
    return std::pair{t.failures.empty(), t.summary(os.str())};
  });
}

CriterionResult criterion_restricted_exceptions() {
  return timed(4, "restricted-prolongation exceptions", std::nullopt, [] {
    Tally t;
    std::ostringstream os;
    for (auto [type, name] : {std::pair{LieType::A, "A2{1}"}, std::pair{LieType::C, "C2{1}"}}) {
      const auto g = graded(type, 2, {1});
      ProlongationTower tower(symbol(g));
      const int mu = g.depth();
      const auto r = restricted_prolong(tower, embedded_g0(g, tower), mu + 1);
      t.expect(!r.vanishes_at(mu + 1), std::string(name) + " vanishes at depth + 1");
      os << name << " restricted " << join(r.dims()) << "; ";
    }
    return std::pair{t.failures.empty(), t.summary(os.str())};
  });
}

CriterionResult criterion_lemma_numbers() {
  return timed(5, "equation count", kLemmaBudget, [] {
    Tally t;
    std::ostringstream os;
    for (int l = 3; l <= 6; ++l) {
      const auto r = lemma_equation_count(l);
      const auto want_rank = static_cast<std::size_t>(l * (l - 2));
      const auto want_dim = static_cast<std::size_t>((l - 1) * (l - 1) + 1);
      t.expect(r.equation_rank == want_rank, "l=" + std::to_string(l) + " rank " + std::to_string(r.equation_rank));
      t.expect(r.g0_prime_dim == want_dim, "l=" + std::to_string(l) + " dim " + std::to_string(r.g0_prime_dim));
      t.expect(r.relations_hold, "l=" + std::to_string(l) + " relations");
      t.expect(r.kernel_equals_constraint && r.kernel_equals_iota, "l=" + std::to_string(l) + " subspaces differ");
      os << "l=" << l << ": rank " << r.equation_rank << " dim " << r.g0_prime_dim << "; ";
    }
    return std::pair{t.failures.empty(), t.summary(os.str())};
  });
}

namespace {

// Table data written out independently of classify.cpp.
std::optional<GradationLabel> expected_aut(LieType type, int l, const MarkedSet& s) {
  if (s.size() != 1) return std::nullopt;
  const int m = s.indices()[0];
  if (type == LieType::C && m == 1) return GradationLabel{"A", 2 * l - 1, MarkedSet({1})};
  if (type == LieType::B && l >= 3 && m == l) return GradationLabel{"D", l + 1, MarkedSet({l + 1})};
  return std::nullopt;
}

std::optional<int> expected_vmrt_dim(LieType type, int l, const MarkedSet& s) {
  if (s.size() != 1) return std::nullopt;
  const int m = s.indices()[0];
  if (type == LieType::A) {
    const int n = l + 1;  // sl(N)
    return (m - 1) + (n - m - 1);
  }
  if (type == LieType::B && m == 2 && l >= 3) return 1 + (2 * l - 5);
  if (type == LieType::D && m == 2 && l >= 4) return 1 + (2 * l - 6);
  return std::nullopt;
}

}  // namespace

CriterionResult criterion_tables(const AcceptanceOptions& o) {
  return timed(6, "automorphism and VMRT tables", std::nullopt, [&] {
    Tally t;
    std::size_t aut_rows = 0, vmrt_rows = 0;
    for (const auto& key : all_gradations(o.table_max_rank)) {
      const auto rec = classify(key.type, key.rank, key.delta1);
      const auto want_aut = expected_aut(key.type, key.rank, key.delta1);
      t.expect(rec.exceptional_aut == want_aut, label(key) + " automorphism row");
      if (want_aut) ++aut_rows;
      const auto want_vmrt = expected_vmrt_dim(key.type, key.rank, key.delta1);
      t.expect(rec.vmrt.has_value() == want_vmrt.has_value(), label(key) + " VMRT presence");
      if (rec.vmrt && want_vmrt) {
        ++vmrt_rows;
        t.expect(rec.vmrt->dim == *want_vmrt, label(key) + " VMRT dim");
        t.expect(static_cast<std::size_t>(rec.vmrt->dim) + 1 <= rec.dims.at(-1), label(key) + " VMRT too large");
      }
    }
    const auto table = exceptional_aut_table(o.table_max_rank);
    const bool g2 = std::any_of(table.begin(), table.end(), [](const AutRow& r) {
      return r.source == GradationLabel{"G", 2, MarkedSet({1})} && r.target == GradationLabel{"B", 3, MarkedSet({1})} &&
             !r.computed;
    });
    t.expect(g2, "G2 row missing");
    return std::pair{t.failures.empty(), t.summary(std::to_string(aut_rows) + " automorphism rows, " +
                                                   std::to_string(vmrt_rows) + " VMRT rows up to rank " +
                                                   std::to_string(o.table_max_rank) + " match")};
  });
}

CriterionResult criterion_embedding() {
  return timed(7, "embedding J", kEmbeddingBudget, [] {
    Tally t;
    std::ostringstream os;
    for (int l = 2; l <= 4; ++l) {
      const auto r = embed_so(l);
      for (const auto& [name, ok] : r.checks())
        t.expect(ok, "so l=" + std::to_string(l) + " " + name);
      const auto iso = embed_so(l, CenterSplit::Isometric);
      os << "so l=" << l << ": hom " << r.homomorphism << " (isometric split " << iso.homomorphism << "), J(p)=p~^J(g) "
         << r.parabolic_compat << ", dim J(n)=" << r.dim_jn << " vs dim n~=" << r.dim_n_target << "; ";
      const auto s = embed_sp(l);
      t.expect(s.homomorphism && s.injective, "sp l=" + std::to_string(l) + " homomorphism");
      t.expect(s.nilradical_match, "sp l=" + std::to_string(l) + " projection");
      os << "sp l=" << l << ": m " << s.dim_m << " -> " << s.dim_m_target << "; ";
    }
    std::string dims = os.str();
    dims.resize(dims.size() - 2);
    return std::pair{t.failures.empty(), t.summary("all checks hold") + " | " + dims};
  });
}

CriterionResult criterion_p2_structures() {
  return timed(8, "P2 structures", kP2Budget, [] {
    Tally t;
    const auto m1 = build_M(1), m2 = build_M(2);
    t.expect(verify_homomorphism(m1), "M1 homomorphism");
    t.expect(verify_homomorphism(m2), "M2 homomorphism");
    t.expect(open_orbit_rank(m1) == 2, "M1 orbit rank");
    t.expect(open_orbit_rank(m2) == 2, "M2 orbit rank");
    const auto d = distinguish(m1, m2);
    t.expect(d.index1 == 2 && d.index2 == 3 && d.distinct, "indices");
    t.expect(!verify_homomorphism(build_M2_with(1)), "mutated M2 passes");
    return std::pair{t.failures.empty(), t.summary("indices (" + std::to_string(d.index1) + "," +
                                                   std::to_string(d.index2) + "), mutation rejected")};
  });
}

CriterionResult criterion_mutation(const AcceptanceOptions& o) {
  return timed(9, "mutation robustness", std::nullopt, [&] {
    Tally t;
    const MatrixLieAlgebra alg = realize(LieType::A, 2);
    const auto& table = alg.structure_constants();
    // Nonzero c_{ij}^k with i < j.
    std::vector<std::array<std::size_t, 3>> entries;
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = i + 1; j < alg.dim(); ++j)
        for (const auto& [k, c] : table.at(i, j)) entries.push_back({i, j, k});
    std::mt19937 rng(o.mutation_seed);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    std::map<std::string, int> caught_by;
    for (int trial = 0; trial < o.mutation_trials; ++trial) {
      const auto [i, j, k] = entries[pick(rng)];
      StructureConstants flipped = table;
      const Rational c = table.coefficient(i, j, k);
      flipped.set(i, j, k, -c);
      flipped.set(j, i, k, c);
      bool caught = false;
      for (const auto& marks : all_marked_sets(2)) {
        const auto g = grade(alg, marks);
        for (const auto& check : check_gradation(alg, flipped, g.degrees(), marks))
          if (!check.passed) {
            caught = true;
            ++caught_by[check.name];
          }
      }
      t.expect(caught, "flip of c(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) +
                           ") undetected");
    }
    std::string by;
    for (const auto& [name, n] : caught_by) by += (by.empty() ? "" : ", ") + name + " " + std::to_string(n);
    return std::pair{t.failures.empty(),
                     t.summary(std::to_string(o.mutation_trials) + " sign flips of sl(3) detected (" + by + ")")};
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  return {criterion_gradation_sweep(o), criterion_type1_oracle(o),  criterion_exception_witnesses(),
          criterion_restricted_exceptions(), criterion_lemma_numbers(),  criterion_tables(o),
          criterion_embedding(),        criterion_p2_structures(), criterion_mutation(o)};
}

}  // namespace gradedlie
