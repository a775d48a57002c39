#ifndef GRADEDLIE_ROOTSYS_HPP
#define GRADEDLIE_ROOTSYS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gradedlie {

enum class LieType { A, B, C, D };

char to_char(LieType t);
LieType parse_lie_type(const std::string& s);
/// Smallest admissible rank: A 1, B 2, C 2, D 3.
int min_rank(LieType t);

/// A root as a λ-coordinate vector together with its expansion over the
/// simple roots. Negative roots have all coefficients <= 0.
struct Root {
  std::vector<int> lambda;
  std::vector<int> coeffs;

  int height() const;
  bool positive() const;
  Root operator-() const;
  bool operator==(const Root&) const = default;
};

/// Nonempty set of simple-root indices, 1-based and sorted.
class MarkedSet {
public:
  MarkedSet() = default;
  explicit MarkedSet(std::vector<int> indices);

  /// Parses "1,3".
  static MarkedSet parse(const std::string& text);

  const std::vector<int>& indices() const { return indices_; }
  bool contains(int i) const;
  std::size_t size() const { return indices_.size(); }
  /// "1,3"
  std::string to_string() const;
  /// Throws InvalidInput unless every index is within 1..rank.
  void validate(int rank) const;

  auto operator<=>(const MarkedSet&) const = default;

private:
  std::vector<int> indices_;
};

/// All nonempty subsets of {1..rank} in lexicographic order of their
/// index lists.
std::vector<MarkedSet> all_marked_sets(int rank);

class RootSystem {
public:
  LieType type() const { return type_; }
  int rank() const { return rank_; }
  /// Length of λ-coordinate vectors: rank+1 for A, rank otherwise.
  int lambda_dim() const { return lambda_dim_; }

  const std::vector<std::vector<int>>& simple_roots() const { return simple_; }
  /// Positive roots ordered by height, then lexicographically by coefficients.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives in the same order.
  const std::vector<Root>& roots() const { return all_; }
  std::size_t root_count() const { return all_.size(); }
  const Root& highest_root() const { return positive_.back(); }

  std::optional<std::size_t> find_lambda(const std::vector<int>& lambda) const;
  std::optional<std::size_t> find_coeffs(const std::vector<int>& coeffs) const;
  /// λ-coordinates of Σ coeffs_i α_i.
  std::vector<int> lambda_of(const std::vector<int>& coeffs) const;

private:
  friend RootSystem build_root_system(LieType, int);
  LieType type_ = LieType::A;
  int rank_ = 0;
  int lambda_dim_ = 0;
  std::vector<std::vector<int>> simple_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
};

RootSystem build_root_system(LieType type, int rank);

/// Σ_{i ∈ delta1} n_i(root). Throws InvalidInput if the λ-vector is not a root.
int degree_of_root(const RootSystem& rs, const std::vector<int>& lambda, const MarkedSet& delta1);
int degree_of_root(const Root& root, const MarkedSet& delta1);

/// Lexicographically smallest image of delta1 under the Dynkin diagram
/// automorphisms (A: reversal, D: swap of the last two nodes, B/C: none).
MarkedSet diagram_automorphism_orbit(LieType type, int rank, const MarkedSet& delta1);

/// Image of simple-root coefficients under the nontrivial diagram
/// automorphism (A reversal, D last-pair swap); identity for B and C.
std::vector<int> apply_diagram_automorphism(LieType type, int rank, const std::vector<int>& coeffs);

}  // namespace gradedlie

#endif  // GRADEDLIE_ROOTSYS_HPP
