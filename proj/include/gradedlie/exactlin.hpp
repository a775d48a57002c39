#ifndef GRADEDLIE_EXACTLIN_HPP
#define GRADEDLIE_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gradedlie {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

bool is_zero(std::span<const Rational> v);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  /// Row-major entries; size rows() * cols().
  const std::vector<Rational>& entries() const { return data_; }

  void append_row(std::span<const Rational> r);
  bool is_zero() const;
  Matrix transpose() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Vector operator*(std::span<const Rational> v) const;
  Matrix& operator+=(const Matrix& o);
  bool operator==(const Matrix& o) const;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  Matrix reduced;
};

/// Reduced row echelon form. The pivot in each column is taken from the
/// lowest-index remaining row with a nonzero entry, so output is
/// deterministic.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// A linear subspace of F^n kept in canonical reduced echelon form, so
/// equal subspaces compare equal entry by entry.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  /// Span of the rows of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace span(const std::vector<Vector>& generators, std::size_t ambient_dim);
  /// Span of selected coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

  /// Rows span the annihilator {w : w . v = 0 for all v in this}.
  Matrix annihilator() const;

  bool operator==(const Subspace& o) const;

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
Subspace kernel_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// Some x with a x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b);

}  // namespace gradedlie

#endif  // GRADEDLIE_EXACTLIN_HPP
