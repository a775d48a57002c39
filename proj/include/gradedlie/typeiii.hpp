#ifndef GRADEDLIE_TYPEIII_HPP
#define GRADEDLIE_TYPEIII_HPP

#include <cstddef>
#include <vector>

#include "gradedlie/exactlin.hpp"
#include "gradedlie/grading.hpp"
#include "gradedlie/prolong.hpp"

namespace gradedlie {

/// g_-1 = part1 ⊕ part2 for a type III gradation. Parts are subspaces of
/// g_-1 in the coordinates of the symbol algebra's degree -1 block.
struct Decomposition {
  std::vector<std::size_t> part1_roots;  // indices into RootSystem::roots()
  std::vector<std::size_t> part2_roots;
  Subspace part1;
  Subspace part2;
};

/// Builds the two parts from their root lists. Accepts raw markings of
/// type A or C whose class is type III (mirror images of (A_l,{α₁,α_k}) are
/// mapped through the diagram automorphism). Throws InvalidInput otherwise.
Decomposition decompose(const GradedLieAlgebra& g);

/// Degree-0 derivations of m mapping each part into itself, in level-0
/// coordinates of the tower.
Subspace g0_preserving(const ProlongationTower& tower, const Decomposition& d);

struct LemmaReport {
  int l = 0;
  std::size_t ambient_dim = 0;
  /// Rows are functionals on (a, b) coordinates: a_{i,j} at (i-1)(l-1)+(j-1),
  /// b_{i,j} after an offset of (l-1)², where φ(e_i) = Σ_j a_{i,j} e_j and
  /// φ(f_i) = Σ_j b_{i,j} f_j.
  Matrix equations;
  std::size_t equation_rank = 0;
  std::size_t g0_prime_dim = 0;
  std::size_t g0_dim = 0;
  /// dim of g0_preserving computed inside the derivations of m.
  std::size_t constraint_dim = 0;
  /// [e_i,e_j] = [f_i,f_j] = 0, [f_i,e_j] = 0 for i ≠ j and [f_i,e_i] = c·h
  /// with the same c for every i.
  bool relations_hold = false;
  /// The constant c above (-1 for the matrix commutator).
  Rational bracket_scale;
  bool kernel_equals_constraint = false;
  bool kernel_equals_iota = false;
};

/// Replays the equation count for (A_l,{α₁,α_l}) with e_i = E_{l+1,i+1},
/// f_i = E_{i+1,1}, h = E_{l+1,1}. Requires l >= 3.
LemmaReport lemma_equation_count(int l);

}  // namespace gradedlie

#endif  // GRADEDLIE_TYPEIII_HPP
