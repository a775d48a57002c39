#ifndef GRADEDLIE_ECP2_HPP
#define GRADEDLIE_ECP2_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedlie/exactlin.hpp"

namespace gradedlie {

/// Sparse polynomial in up to four variables x0..x3 with rational
/// coefficients. Zero coefficients are never stored.
class Polynomial {
public:
  static constexpr int kVars = 4;
  using Exponent = std::array<int, kVars>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial var(int i);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coefficient(const Exponent& e) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Rational evaluate(const std::array<Rational, kVars>& at) const;
  /// Replaces x_i by images[i].
  Polynomial substitute(const std::array<Polynomial, kVars>& images) const;
  /// ∂/∂x_i.
  Polynomial derivative(int i) const;

  std::string to_string() const;

private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

using PolyMatrix = std::array<std::array<Polynomial, 3>, 3>;
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
bool is_identity(const PolyMatrix& m);

/// 3x3 matrix of polynomials in (a₁, a₂) = (x0, x1).
struct PolynomialMatrixFamily {
  std::string name;
  PolyMatrix entries;

  Matrix at(const Rational& a1, const Rational& a2) const;
  /// Entries with (a₁, a₂) replaced by the given polynomials.
  PolyMatrix substituted(const Polynomial& a1, const Polynomial& a2) const;
};

/// variant 1: rows (1,a₁,a₂)/(0,1,0)/(0,0,1).
/// variant 2: rows (1,a₁,a₂+½a₁²)/(0,1,a₁)/(0,0,1).
PolynomialMatrixFamily build_M(int variant);
/// M₂ with the ½ in the corner replaced by `coefficient`.
PolynomialMatrixFamily build_M2_with(const Rational& coefficient);

/// M(a)M(b) = M(a+b) as a polynomial identity in a₁,a₂,b₁,b₂.
bool verify_homomorphism(const PolynomialMatrixFamily& m);
Polynomial determinant(const PolynomialMatrixFamily& m);
/// M(a)M(-a) = I identically.
bool inverse_is_negation(const PolynomialMatrixFamily& m);

enum class OrbitAction {
  /// v ↦ M(a)ᵀ v
  Transpose,
  /// v ↦ M(a) v
  Left,
};

/// Rank at a = 0 of the orbit map a ↦ [M(a)·v] into P², measured as
/// rank[∂_{a₁}(M v), ∂_{a₂}(M v), v] - 1. Rank 2 means an open orbit.
std::size_t orbit_rank(const PolynomialMatrixFamily& m, OrbitAction action, const Vector& base);
/// Transpose action at e₁.
std::size_t open_orbit_rank(const PolynomialMatrixFamily& m);

/// Smallest k with (g - I)^k = 0. Throws InvalidInput if g is not unipotent.
int unipotent_index(const Matrix& g);

struct Distinction {
  int index1 = 0;
  int index2 = 0;
  /// Whether (M(a) - I)² vanishes identically.
  bool square_zero1 = false;
  bool square_zero2 = false;
  bool distinct = false;
};
/// Maximum unipotent index over (a₁,a₂) ∈ {-1,0,1}², cross-checked against
/// the symbolic square. Both families must be homomorphisms.
Distinction distinguish(const PolynomialMatrixFamily& m1, const PolynomialMatrixFamily& m2);

/// M(a) - I lies in the degree-1 part of (A,2,{α₁}) for every sampled a.
bool image_in_first_row_radical(const PolynomialMatrixFamily& m);

}  // namespace gradedlie

#endif  // GRADEDLIE_ECP2_HPP
