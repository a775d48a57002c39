#ifndef GRADEDLIE_GRADING_HPP
#define GRADEDLIE_GRADING_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/exactlin.hpp"
#include "gradedlie/liealg.hpp"
#include "gradedlie/rootsys.hpp"

namespace gradedlie {

struct GradationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One outcome per named check: lie_bracket, bracket_grading,
/// dimension_symmetry, fundamental, depth, open_orbit. `table` is taken
/// separately from `alg` so a perturbed table can be checked against the
/// same basis and degrees.
std::vector<GradationCheck> check_gradation(const MatrixLieAlgebra& alg, const StructureConstants& table,
                                            const std::vector<int>& degrees, const MarkedSet& delta1);

/// g = ⊕ g_k induced by marking the simple roots in delta1.
class GradedLieAlgebra {
public:
  const MatrixLieAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const MatrixLieAlgebra> algebra_ptr() const { return alg_; }
  const MarkedSet& delta1() const { return delta1_; }
  const StructureConstants& table() const { return alg_->structure_constants(); }

  int depth() const { return depth_; }
  int degree_of(std::size_t basis_index) const { return degrees_[basis_index]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Basis indices of g_k in increasing order.
  std::vector<std::size_t> basis_of_degree(int k) const;
  std::size_t dim_part(int k) const { return basis_of_degree(k).size(); }
  /// dim g_k for -depth <= k <= depth.
  std::map<int, std::size_t> dims() const;

  /// g_k as a coordinate subspace of g.
  Subspace part(int k) const;
  /// gⁱ = ⊕_{k >= i} g_k.
  Subspace filtration(int i) const;
  Subspace parabolic() const { return filtration(0); }
  Subspace nilradical() const { return filtration(1); }
  /// m = ⊕_{k < 0} g_k.
  Subspace negative_part() const;

  const std::vector<GradationCheck>& checks() const { return checks_; }

private:
  friend GradedLieAlgebra grade(std::shared_ptr<const MatrixLieAlgebra>, const MarkedSet&);
  std::shared_ptr<const MatrixLieAlgebra> alg_;
  MarkedSet delta1_;
  std::vector<int> degrees_;
  int depth_ = 0;
  std::vector<GradationCheck> checks_;
};

/// Assigns degrees and verifies every gradation check; throws
/// InvariantViolation naming the first failure.
GradedLieAlgebra grade(std::shared_ptr<const MatrixLieAlgebra> alg, const MarkedSet& delta1);
GradedLieAlgebra grade(const MatrixLieAlgebra& alg, const MarkedSet& delta1);

/// m ⊕ p = g: dimensions add up and the flattened matrices of both parts
/// are jointly independent.
bool bruhat_open_orbit_witness(const GradedLieAlgebra& g);

/// Degree of the graded component containing E_{i,j}; nullopt where the
/// entry is constrained away.
using DegreeGrid = std::vector<std::vector<std::optional<int>>>;

/// Full n x n grid. Types A and C only.
DegreeGrid degree_grid(const GradedLieAlgebra& g);
/// Collapses runs of identical adjacent rows and columns into blocks.
DegreeGrid block_grid(const DegreeGrid& grid);
/// Whitespace-aligned text, one field per cell, '-' for negatives.
std::string render_grid(const DegreeGrid& grid);
std::string render_block_diagram(const GradedLieAlgebra& g);

/// The negative part m with its own basis (degree -1 first, then -2, ...)
/// and bracket table.
class SymbolAlgebra {
public:
  /// `degrees` must be negative and nonincreasing.
  SymbolAlgebra(std::vector<int> degrees, StructureConstants table);

  std::size_t dim() const { return degrees_.size(); }
  int depth() const { return depth_; }
  int degree(std::size_t a) const { return degrees_[a]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const StructureConstants& table() const { return table_; }

  /// First basis index of g_d, d < 0.
  std::size_t block_offset(int d) const;
  std::size_t block_dim(int d) const;

  /// Position of basis vector a of m in the parent algebra's basis, when
  /// built from a graded algebra.
  std::optional<std::size_t> parent_index(std::size_t a) const;
  std::optional<std::size_t> index_of_parent(std::size_t parent) const;

  /// g_{-k} = [g_{-k+1}, g_{-1}] for all k >= 2.
  bool is_fundamental() const;
  /// Brackets respect degrees, so every bracket of more than depth() factors vanishes.
  bool is_graded() const;

private:
  friend SymbolAlgebra symbol(const GradedLieAlgebra&);
  std::vector<int> degrees_;
  StructureConstants table_;
  int depth_ = 0;
  std::vector<std::size_t> parent_;
};

SymbolAlgebra symbol(const GradedLieAlgebra& g);

}  // namespace gradedlie

#endif  // GRADEDLIE_GRADING_HPP
