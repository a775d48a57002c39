#ifndef GRADEDLIE_ACCEPTANCE_HPP
#define GRADEDLIE_ACCEPTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gradedlie {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock budget; nullopt when the criterion has none.
  std::optional<double> budget_seconds;
  bool within_budget() const { return !budget_seconds || seconds <= *budget_seconds; }
};

struct AcceptanceOptions {
  /// Rank bound of the gradation sweep.
  int sweep_max_rank = 5;
  /// Rank bound of the tower comparison.
  int tower_max_rank = 4;
  /// Rank bound of the automorphism and VMRT tables.
  int table_max_rank = 6;
  int mutation_trials = 10;
  std::uint32_t mutation_seed = 20260101;
};

/// Options with every rank bound clipped to max_rank.
AcceptanceOptions acceptance_options_for(int max_rank);

CriterionResult criterion_gradation_sweep(const AcceptanceOptions& o);
CriterionResult criterion_type1_oracle(const AcceptanceOptions& o);
CriterionResult criterion_exception_witnesses();
CriterionResult criterion_restricted_exceptions();
CriterionResult criterion_lemma_numbers();
CriterionResult criterion_tables(const AcceptanceOptions& o);
CriterionResult criterion_embedding();
CriterionResult criterion_p2_structures();
CriterionResult criterion_mutation(const AcceptanceOptions& o);

/// All nine in order. A criterion fails when its checks fail or it runs
/// over budget.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o = {});

}  // namespace gradedlie

#endif  // GRADEDLIE_ACCEPTANCE_HPP
