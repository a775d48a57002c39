#ifndef GRADEDLIE_EMBEDJ_HPP
#define GRADEDLIE_EMBEDJ_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/exactlin.hpp"
#include "gradedlie/rootsys.hpp"

namespace gradedlie {

/// How the center row and column of X ∈ so(2l+1) are spread over the two
/// middle rows and columns of so(2l+2).
enum class CenterSplit {
  /// Both copies carry a and ξ unchanged, as in the block display.
  Duplicate,
  /// The center basis vector goes to e_l + ½e_{l+1}, an isometry of the
  /// anti-diagonal forms; the copies then carry (a/2, a) and (ξ, ξ/2).
  Isometric,
};

/// X ↦ X̃ for X ∈ so(2l+1) given as a (2l+1)x(2l+1) matrix.
Matrix tilde(const Matrix& x, CenterSplit split = CenterSplit::Duplicate);

struct EmbeddingReport {
  std::string source;
  std::string target;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool lands_in_target = false;
  bool homomorphism = false;
  bool injective = false;
  /// embed_so: J(p) = p̃ ∩ J(g). embed_sp: J(p) ⊆ p̃.
  bool parabolic_compat = false;
  /// embed_so: J(n) = ñ. embed_sp: the first-column projection m → m̃ is
  /// bijective.
  bool nilradical_match = false;
  std::size_t dim_jp = 0;
  std::size_t dim_p_cap_jg = 0;
  std::size_t dim_jn = 0;
  std::size_t dim_n_target = 0;
  std::size_t dim_jn_cap_n_target = 0;
  std::size_t dim_m = 0;
  std::size_t dim_m_target = 0;
  /// embed_sp only: degree of the upper-right corner entry in each grading.
  int corner_source_degree = 0;
  int corner_target_degree = 0;

  std::vector<std::pair<std::string, bool>> checks() const;
  bool all_passed() const;
};

/// J: so(2l+1) → so(2l+2) with the gradations (B_l, source_mark) and
/// (D_{l+1}, target_mark). Defaults: both {α₁}.
EmbeddingReport embed_so(int l, CenterSplit split = CenterSplit::Duplicate);
EmbeddingReport embed_so(int l, CenterSplit split, const MarkedSet& source_mark, const MarkedSet& target_mark);

/// sp(2l) ⊆ sl(2l) with the gradations (C_l,{α₁}) and (A_{2l-1},{α₁}).
EmbeddingReport embed_sp(int l);

}  // namespace gradedlie

#endif  // GRADEDLIE_EMBEDJ_HPP
