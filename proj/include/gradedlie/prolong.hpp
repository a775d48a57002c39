#ifndef GRADEDLIE_PROLONG_HPP
#define GRADEDLIE_PROLONG_HPP

#include <cstddef>
#include <span>
#include <optional>
#include <vector>

#include "gradedlie/exactlin.hpp"
#include "gradedlie/grading.hpp"

namespace gradedlie {

/// Degree-k part of the prolongation. An element u is stored as its value
/// table: the concatenation over the basis x_b of m of u(x_b), where
/// u(x_b) lies in T_{k-j} for x_b of degree -j. T_t is the degree-t block
/// of m when t < 0, and the coordinate space of level t otherwise.
struct ProlongationLevel {
  int degree = 0;
  std::vector<std::size_t> offsets;  // per basis vector of m
  std::vector<std::size_t> widths;
  std::size_t table_size = 0;
  /// Rows are the basis value tables, in canonical echelon form.
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  Vector basis_table(std::size_t i) const { return space.basis_vector(i); }
  Vector value(std::span<const Rational> table, std::size_t b) const;
};

class ProlongationTower {
public:
  /// Level 0 is every degree-preserving derivation of m.
  explicit ProlongationTower(SymbolAlgebra m);
  /// Level 0 is the span of the given value tables, each of which must be
  /// a degree-preserving derivation. Higher levels are then the
  /// prolongation of (m, level 0).
  ProlongationTower(SymbolAlgebra m, const std::vector<Vector>& level0_tables);

  const SymbolAlgebra& symbol() const { return m_; }
  const std::vector<ProlongationLevel>& levels() const { return levels_; }
  const ProlongationLevel& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  std::vector<std::size_t> dims() const;
  /// True once the last computed level is zero.
  bool stabilized() const { return levels_.back().dim() == 0; }

  /// Computes the next level.
  const ProlongationLevel& extend();
  void extend_to(int k);

  /// dim T_t.
  std::size_t target_dim(int t) const;
  /// y ↦ [y, x_b] as a dim T_{t-j_b} x dim T_t matrix.
  const Matrix& action(int t, std::size_t b) const;

  /// u([x_a,x_b]) - [u(x_a),x_b] - [x_a,u(x_b)] for a level-k table u.
  Vector residual(int k, std::span<const Rational> table, std::size_t a, std::size_t b) const;
  bool is_derivation(int k, std::span<const Rational> table) const;

  /// Level-0 elements as endomorphisms of m (columns are images of x_b).
  Matrix level0_matrix(std::span<const Rational> table) const;
  Vector level0_table(const Matrix& endo) const;
  /// Commutator of two level-0 tables.
  Vector level0_bracket(std::span<const Rational> u, std::span<const Rational> v) const;

private:
  ProlongationTower(SymbolAlgebra m, std::nullptr_t);
  Vector residual_in(const ProlongationLevel& shape, std::span<const Rational> u, std::size_t a, std::size_t b) const;
  ProlongationLevel layout(int k) const;
  void add_level(ProlongationLevel level);
  ProlongationLevel solve_level(int k) const;

  SymbolAlgebra m_;
  std::vector<ProlongationLevel> levels_;
  // action_[t + depth][b]
  std::vector<std::vector<Matrix>> action_;
};

/// All degree-0 derivations of m.
ProlongationLevel prolong_level0(const SymbolAlgebra& m);
/// Computes and returns the next level of the tower.
const ProlongationLevel& prolong_next(ProlongationTower& tower);

/// ι: g_k → level k, as a matrix whose row r holds the level-k coordinates
/// of the r-th basis vector of g_k (g.basis_of_degree(k) order). Extends the
/// tower as needed. Throws InvariantViolation if an image falls outside the
/// level.
Matrix embed_positive(const GradedLieAlgebra& g, ProlongationTower& tower, int k);

/// Value table of an element of g_k (k >= 0, g coordinates) under ι.
Vector embed_table(const GradedLieAlgebra& g, ProlongationTower& tower, int k, const Vector& element);

/// g(m, g0) with level k a subspace of the coordinates of the full level k.
struct RestrictedProlongation {
  std::vector<Subspace> levels;
  std::vector<std::size_t> dims() const;
  bool vanishes_at(int k) const { return levels.at(static_cast<std::size_t>(k)).dim() == 0; }
};

/// Level 0 is g0 (a subspace of level-0 coordinates, checked to be a
/// subalgebra); level k is {u in level k : u(g_-1) ⊆ level k-1 of the
/// restricted tower}. The full tower is extended up to `cap`.
RestrictedProlongation restricted_prolong(ProlongationTower& tower, const Subspace& g0, int cap);

/// ι(g_0) as a subspace of level-0 coordinates.
Subspace embedded_g0(const GradedLieAlgebra& g, ProlongationTower& tower);

/// Default degree cap: depth + 2.
int default_cap(const SymbolAlgebra& m);

}  // namespace gradedlie

#endif  // GRADEDLIE_PROLONG_HPP
