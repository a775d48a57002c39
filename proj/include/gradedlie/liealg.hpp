#ifndef GRADEDLIE_LIEALG_HPP
#define GRADEDLIE_LIEALG_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/exactlin.hpp"
#include "gradedlie/rootsys.hpp"

namespace gradedlie {

/// Commutator xy - yx. Throws InvalidInput on size mismatch.
Matrix bracket(const Matrix& x, const Matrix& y);

/// Transpose with respect to the anti-diagonal: (X')_{i,j} = X_{n+1-j, n+1-i}.
Matrix antitranspose(const Matrix& x);

/// n x n matrix unit with a 1 in (row, col), 0-based.
Matrix matrix_unit(std::size_t n, std::size_t row, std::size_t col);

/// Sparse table of structure constants: [b_i, b_j] = Σ_k c_ij^k b_k.
class StructureConstants {
public:
  using Term = std::pair<std::uint32_t, Rational>;
  using Terms = std::vector<Term>;

  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Terms& at(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets c_ij^k (only that entry; c_ji^k is left alone).
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);

  /// Bilinear extension of the table to coordinate vectors.
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  bool all_integral() const;
  /// First (i, j) with [b_i, b_j] != -[b_j, b_i] or [b_i, b_i] != 0.
  std::optional<std::pair<std::size_t, std::size_t>> antisymmetry_failure() const;
  /// Jacobi identity on one basis triple.
  bool jacobi_holds(std::size_t i, std::size_t j, std::size_t k) const;
  /// Jacobi identity on all triples i < j < k.
  std::optional<std::array<std::size_t, 3>> jacobi_failure() const;

  bool operator==(const StructureConstants&) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Terms> table_;
};

struct BasisTag {
  enum class Kind { Cartan, Root };
  Kind kind = Kind::Cartan;
  /// Cartan index 0..rank-1, or index into RootSystem::roots().
  std::size_t index = 0;
};

struct BasisElement {
  Matrix matrix;
  BasisTag tag;
};

/// A classical simple Lie algebra realized by n x n matrices: Cartan
/// elements dual to the simple coroots first, then one root vector per
/// root in RootSystem::roots() order.
class MatrixLieAlgebra {
public:
  LieType type() const { return roots_.type(); }
  int rank() const { return roots_.rank(); }
  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const RootSystem& root_system() const { return roots_; }

  /// Basis index of the root vector for root index `root` of roots().
  std::size_t root_basis_index(std::size_t root) const { return static_cast<std::size_t>(rank()) + root; }
  /// Weight of the matrix position (row, col) in λ-coordinates.
  std::vector<int> position_weight(std::size_t row, std::size_t col) const;

  /// Unique coefficients reproducing x. Throws InvariantViolation if x is
  /// outside the span of the basis.
  Vector coordinates(const Matrix& x) const;
  Matrix element(const Vector& coeffs) const;
  /// Whether x satisfies the defining linear conditions of the algebra.
  bool contains(const Matrix& x) const;

  const StructureConstants& structure_constants() const { return table_; }

private:
  friend MatrixLieAlgebra realize(LieType, int);
  RootSystem roots_;
  std::size_t n_ = 0;
  std::vector<std::vector<int>> weights_;  // per matrix index
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> pivot_positions_;
  Matrix pivot_inverse_;
  StructureConstants table_;
};

/// sl(l+1), so(2l+1), sp(2l), so(2l) in the anti-diagonal conventions.
MatrixLieAlgebra realize(LieType type, int rank);

}  // namespace gradedlie

#endif  // GRADEDLIE_LIEALG_HPP
