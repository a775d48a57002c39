#include "gradedlie/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gradedlie/error.hpp"

namespace gradedlie {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length does not match column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const Rational> r) {
  if (rows_ == 0 && data_.empty()) cols_ = r.size();
  if (r.size() != cols_) throw InvalidInput("appended row has wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const { return gradedlie::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out = *this;
  out += o;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix size mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix size mismatch in -");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix size mismatch in *");
  Matrix out(rows_, o.cols_);
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (sgn(b) == 0) continue;
        t = a * b;
        out(i, j) += t;
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_)
    if (sgn(x) != 0) x *= s;
  return out;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  Vector out(rows_);
  Rational t;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) == 0) continue;
      t = a * v[c];
      out[r] += t;
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << gradedlie::to_string((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

// ------------------------------------------------------------------ rref

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t next = 0;
  std::vector<std::size_t> nz;  // nonzero columns of the pivot row
  Rational factor, t;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t p = next;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != next) {
      auto a = m.row(p);
      auto b = m.row(next);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(next);
    if (prow[c] != 1) {
      const Rational inv = 1 / prow[c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(prow[j]) != 0) nz.push_back(j);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next) continue;
      auto row = m.row(r);
      if (sgn(row[c]) == 0) continue;
      factor = row[c];
      for (std::size_t j : nz) {
        t = factor * prow[j];
        row[j] -= t;
      }
    }
    out.pivot_columns.push_back(c);
    ++next;
  }
  out.rank = next;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// -------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s(generators.cols());
  auto r = rref(generators);
  s.basis_ = Matrix(r.rank, generators.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto src = r.reduced.row(i);
    std::copy(src.begin(), src.end(), s.basis_.row(i).begin());
  }
  s.pivots_ = std::move(r.pivot_columns);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& generators, std::size_t ambient_dim) {
  return span(Matrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes) {
  Matrix m(axes.size(), ambient_dim);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] >= ambient_dim) throw InvalidInput("coordinate axis out of range");
    m(i, axes[i]) = 1;
  }
  return span(m);
}

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw InvalidInput("subspace dimension mismatch");
  Vector coeffs(dim());
  Vector residual(v.begin(), v.end());
  Rational t;
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = residual[pivots_[i]];
    if (sgn(coeffs[i]) == 0) continue;
    auto b = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (sgn(b[j]) == 0) continue;
      t = coeffs[i] * b[j];
      residual[j] -= t;
    }
  }
  if (!gradedlie::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspace dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Matrix Subspace::annihilator() const {
  return kernel_basis(basis_).basis();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

// ------------------------------------------------------ kernel, solving

Subspace kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  auto r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  Matrix k(cols - r.rank, cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Rational& x = r.reduced(i, f);
      if (sgn(x) != 0) k(row, r.pivot_columns[i]) = -x;
    }
    ++row;
  }
  return Subspace::span(k);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("intersect: ambient dimension mismatch");
  Matrix constraints = a.annihilator();
  const Matrix bann = b.annihilator();
  for (std::size_t i = 0; i < bann.rows(); ++i) constraints.append_row(bann.row(i));
  if (constraints.rows() == 0) return Subspace::full(a.ambient_dim());
  return kernel_basis(constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("sum: ambient dimension mismatch");
  Matrix m = a.basis();
  if (m.rows() == 0) m = Matrix(0, a.ambient_dim());
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis().row(i));
  return Subspace::span(m);
}

std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InvalidInput("solve: right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto red = rref(std::move(aug));
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_columns[i]] = red.reduced(i, a.cols());
  return x;
}

}  // namespace gradedlie
