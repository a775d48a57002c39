#include "gradedlie/classify.hpp"

#include "gradedlie/error.hpp"
#include "gradedlie/prolong.hpp"

namespace gradedlie {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Excluded: return "Excluded";
    case Verdict::TypeI: return "TypeI";
    case Verdict::TypeII: return "TypeII";
    case Verdict::TypeIII: return "TypeIII";
  }
  return "?";
}

std::string GradationLabel::to_string() const {
  return "(" + type + "," + std::to_string(rank) + ",{" + delta1.to_string() + "})";
}

std::map<int, std::size_t> graded_dims(LieType type, int rank, const MarkedSet& delta1) {
  delta1.validate(rank);
  const RootSystem rs = build_root_system(type, rank);
  std::map<int, std::size_t> dims;
  const int depth = degree_of_root(rs.highest_root(), delta1);
  for (int k = -depth; k <= depth; ++k) dims[k] = 0;
  dims[0] = static_cast<std::size_t>(rank);
  for (const auto& r : rs.roots()) ++dims[degree_of_root(r, delta1)];
  return dims;
}

GradationLabel canonical_class(LieType type, int rank, const MarkedSet& delta1) {
  MarkedSet s = diagram_automorphism_orbit(type, rank, delta1);
  if (type == LieType::B && rank == 2) {
    // Long and short simple roots trade places.
    std::vector<int> idx;
    for (int i : s.indices()) idx.push_back(3 - i);
    return {"C", 2, MarkedSet(idx)};
  }
  if (type == LieType::D && rank == 3) {
    // α₁ of D₃ is the middle node of A₃.
    static const int to_a[] = {0, 2, 1, 3};
    std::vector<int> idx;
    for (int i : s.indices()) idx.push_back(to_a[i]);
    return {"A", 3, diagram_automorphism_orbit(LieType::A, 3, MarkedSet(idx))};
  }
  return {std::string(1, to_char(type)), rank, s};
}

std::optional<GradationLabel> exceptional_aut(LieType type, int rank, const MarkedSet& delta1) {
  delta1.validate(rank);
  if (type == LieType::C && delta1 == MarkedSet({1})) return GradationLabel{"A", 2 * rank - 1, MarkedSet({1})};
  if (type == LieType::B && rank >= 3 && delta1 == MarkedSet({rank}))
    return GradationLabel{"D", rank + 1, MarkedSet({rank + 1})};
  return std::nullopt;
}

std::optional<VmrtModel> vmrt_model(LieType type, int rank, const MarkedSet& delta1) {
  delta1.validate(rank);
  if (delta1.size() != 1) return std::nullopt;
  const int m = delta1.indices().front();
  const int l = rank;
  switch (type) {
    case LieType::A:
      if (m == 1 || m == l) return VmrtModel{"P(T)", l - 1};
      return VmrtModel{"P^" + std::to_string(m - 1) + "xP^" + std::to_string(l - m), l - 1};
    case LieType::B:
      if (m == 2 && l >= 3) return VmrtModel{"P^1xQ^" + std::to_string(2 * l - 5), 2 * l - 4};
      return std::nullopt;
    case LieType::D:
      if (m == 2 && l >= 4) return VmrtModel{"P^1xQ^" + std::to_string(2 * l - 6), 2 * l - 5};
      return std::nullopt;
    case LieType::C: return std::nullopt;
  }
  return std::nullopt;
}

ClassificationRecord classify(LieType type, int rank, const MarkedSet& delta1) {
  if (rank < min_rank(type))
    throw InvalidInput(std::string("rank ") + std::to_string(rank) + " is below the minimum for type " +
                       to_char(type));
  delta1.validate(rank);
  ClassificationRecord rec;
  rec.type = type;
  rec.rank = rank;
  rec.delta1 = delta1;
  rec.canonical = canonical_class(type, rank, delta1);
  rec.dims = graded_dims(type, rank, delta1);
  rec.depth = rec.dims.rbegin()->first;
  rec.contact = rec.depth == 2 && rec.dims.at(-2) == 1;

  const auto& c = rec.canonical;
  const auto& idx = c.delta1.indices();
  const bool excluded = (c.type == "A" || c.type == "C") && c.delta1 == MarkedSet({1});
  const bool type3 = (c.type == "A" && idx.size() == 2 && idx[0] == 1 && idx[1] >= 2) ||
                     (c.type == "C" && idx.size() == 2 && idx[0] == 1 && idx[1] == c.rank);
  if (excluded)
    rec.verdict = Verdict::Excluded;
  else if (type3)
    rec.verdict = Verdict::TypeIII;
  else if (rec.depth == 1 || rec.contact)
    rec.verdict = Verdict::TypeII;
  else
    rec.verdict = Verdict::TypeI;

  rec.exceptional_aut = exceptional_aut(type, rank, delta1);
  rec.vmrt = vmrt_model(type, rank, delta1);
  if (rec.vmrt && static_cast<std::size_t>(rec.vmrt->dim) + 1 > rec.dims.at(-1))
    throw InvariantViolation("VMRT dimension exceeds dim P(g_-1) for " + c.to_string());
  return rec;
}

std::vector<AutRow> exceptional_aut_table(int max_rank) {
  std::vector<AutRow> rows;
  for (int l = 2; l <= max_rank; ++l)
    rows.push_back({{"C", l, MarkedSet({1})}, *exceptional_aut(LieType::C, l, MarkedSet({1})), true});
  for (int l = 3; l <= max_rank; ++l)
    rows.push_back({{"B", l, MarkedSet({l})}, *exceptional_aut(LieType::B, l, MarkedSet({l})), true});
  rows.push_back({{"G", 2, MarkedSet({1})}, {"B", 3, MarkedSet({1})}, false});
  return rows;
}

std::vector<GradationKey> all_gradations(int max_rank) {
  std::vector<GradationKey> out;
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
    const int lo = t == LieType::D ? 4 : min_rank(t);
    for (int l = lo; l <= max_rank; ++l)
      for (auto& s : all_marked_sets(l)) out.push_back({t, l, std::move(s)});
  }
  return out;
}

TowerComparison compare_with_tower(const GradedLieAlgebra& g, std::optional<int> max_degree) {
  TowerComparison out;
  ProlongationTower tower(symbol(g));
  const int mu = g.depth();
  out.reproduces_g = true;
  const int last = max_degree.value_or(mu + 1);
  for (int k = 0; k <= last; ++k) {
    if (k > tower.top()) tower.extend();
    const std::size_t want = k <= mu ? g.dim_part(k) : 0;
    const std::size_t got = tower.level(k).dim();
    out.grading_dims.push_back(want);
    out.tower_dims.push_back(got);
    if (got != want) {
      out.reproduces_g = false;
      if (got > want) out.first_excess = k;
      break;
    }
  }
  return out;
}

}  // namespace gradedlie
