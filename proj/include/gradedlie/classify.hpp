#ifndef GRADEDLIE_CLASSIFY_HPP
#define GRADEDLIE_CLASSIFY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/grading.hpp"
#include "gradedlie/rootsys.hpp"

namespace gradedlie {

enum class Verdict { Excluded, TypeI, TypeII, TypeIII };
std::string to_string(Verdict v);

/// (X_l, Δ₁) with X possibly outside A-D (the G₂ row of the automorphism table).
struct GradationLabel {
  std::string type;
  int rank = 0;
  MarkedSet delta1;
  std::string to_string() const;
  bool operator==(const GradationLabel&) const = default;
};

struct VmrtModel {
  std::string model;
  int dim = 0;
};

struct ClassificationRecord {
  LieType type = LieType::A;
  int rank = 0;
  MarkedSet delta1;
  /// Representative of the isomorphism class the verdict is computed on.
  GradationLabel canonical;
  int depth = 0;
  std::map<int, std::size_t> dims;
  bool contact = false;
  Verdict verdict = Verdict::TypeI;
  std::optional<GradationLabel> exceptional_aut;
  std::optional<VmrtModel> vmrt;
};

/// dim g_k for all k, from root data alone.
std::map<int, std::size_t> graded_dims(LieType type, int rank, const MarkedSet& delta1);

/// Diagram automorphisms plus the low-rank coincidences B₂ ≅ C₂ and D₃ ≅ A₃.
GradationLabel canonical_class(LieType type, int rank, const MarkedSet& delta1);

ClassificationRecord classify(LieType type, int rank, const MarkedSet& delta1);

std::optional<GradationLabel> exceptional_aut(LieType type, int rank, const MarkedSet& delta1);
std::optional<VmrtModel> vmrt_model(LieType type, int rank, const MarkedSet& delta1);

/// Source/target rows of the automorphism table up to max_rank, including
/// the (G₂,{α₁}) row, which is data only.
struct AutRow {
  GradationLabel source;
  GradationLabel target;
  bool computed = true;
};
std::vector<AutRow> exceptional_aut_table(int max_rank);

/// Every (type, rank, Δ₁) with rank <= max_rank: A from rank 1, B and C
/// from 2, D from 4.
struct GradationKey {
  LieType type;
  int rank;
  MarkedSet delta1;
};
std::vector<GradationKey> all_gradations(int max_rank);

inline constexpr int kDefaultMaxRank = 5;
inline constexpr int kHardMaxRank = 6;

/// Full prolongation tower against the graded dimensions of g, degree by
/// degree up to depth + 1 (or max_degree when given), stopping at the first
/// degree where they differ.
struct TowerComparison {
  std::vector<std::size_t> grading_dims;
  std::vector<std::size_t> tower_dims;
  bool reproduces_g = false;
  std::optional<int> first_excess;
};
TowerComparison compare_with_tower(const GradedLieAlgebra& g, std::optional<int> max_degree = std::nullopt);

}  // namespace gradedlie

#endif  // GRADEDLIE_CLASSIFY_HPP
