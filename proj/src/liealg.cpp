#include "gradedlie/liealg.hpp"

#include <algorithm>

#include "gradedlie/error.hpp"

namespace gradedlie {

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw InvalidInput("bracket: matrices must be square of the same size");
  return x * y - y * x;
}

Matrix antitranspose(const Matrix& x) {
  const std::size_t n = x.rows();
  if (x.cols() != n) throw InvalidInput("antitranspose: matrix must be square");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = x(n - 1 - j, n - 1 - i);
  return out;
}

Matrix matrix_unit(std::size_t n, std::size_t row, std::size_t col) {
  Matrix m(n, n);
  m(row, col) = 1;
  return m;
}

// --------------------------------------------------- StructureConstants

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

Rational StructureConstants::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : at(i, j))
    if (idx == k) return c;
  return 0;
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  auto& terms = table_[i * dim_ + j];
  auto it = std::find_if(terms.begin(), terms.end(), [k](const Term& t) { return t.first == k; });
  if (it != terms.end()) {
    if (sgn(value) == 0)
      terms.erase(it);
    else
      it->second = value;
    return;
  }
  if (sgn(value) == 0) return;
  terms.emplace_back(static_cast<std::uint32_t>(k), value);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  auto& terms = table_[i * dim_ + j];
  terms.clear();
  for (std::size_t k = 0; k < value.size(); ++k)
    if (sgn(value[k]) != 0) terms.emplace_back(static_cast<std::uint32_t>(k), value[k]);
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  Rational s, t;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& terms = at(i, j);
      if (terms.empty()) continue;
      s = x[i] * y[j];
      for (const auto& [k, c] : terms) {
        t = s * c;
        out[k] += t;
      }
    }
  }
  return out;
}

Vector StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (const auto& [k, c] : at(i, j)) out[k] = c;
  return out;
}

bool StructureConstants::all_integral() const {
  for (const auto& terms : table_)
    for (const auto& [k, c] : terms)
      if (c.get_den() != 1) return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> StructureConstants::antisymmetry_failure() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!at(i, i).empty()) return std::pair{i, i};
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& a = at(i, j);
      const auto& b = at(j, i);
      if (a.size() != b.size()) return std::pair{i, j};
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].first != b[t].first || a[t].second != -b[t].second) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

namespace {

// [x, b_k] for a sparse x given as terms.
void accumulate_bracket_with(const StructureConstants& sc, const StructureConstants::Terms& x,
                             std::size_t k, Vector& out, const Rational& scale) {
  Rational t;
  for (const auto& [i, a] : x)
    for (const auto& [m, c] : sc.at(i, k)) {
      t = scale * a * c;
      out[m] += t;
    }
}

}  // namespace

bool StructureConstants::jacobi_holds(std::size_t i, std::size_t j, std::size_t k) const {
  // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
  Vector out(dim_);
  const Rational one = 1;
  accumulate_bracket_with(*this, at(i, j), k, out, one);
  accumulate_bracket_with(*this, at(j, k), i, out, one);
  accumulate_bracket_with(*this, at(k, i), j, out, one);
  return gradedlie::is_zero(out);
}

std::optional<std::array<std::size_t, 3>> StructureConstants::jacobi_failure() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k)
        if (!jacobi_holds(i, j, k)) return std::array{i, j, k};
  return std::nullopt;
}

// ------------------------------------------------------------- realize

namespace {

std::size_t matrix_size(LieType t, int l) {
  switch (t) {
    case LieType::A: return static_cast<std::size_t>(l) + 1;
    case LieType::B: return 2 * static_cast<std::size_t>(l) + 1;
    case LieType::C:
    case LieType::D: return 2 * static_cast<std::size_t>(l);
  }
  return 0;
}

std::vector<int> weight_of_index(LieType t, int l, std::size_t n, std::size_t p) {
  const int d = t == LieType::A ? l + 1 : l;
  std::vector<int> w(d, 0);
  if (t == LieType::A) {
    w[p] = 1;
    return w;
  }
  const auto lu = static_cast<std::size_t>(l);
  if (p < lu) {
    w[p] = 1;
  } else if (t == LieType::B && p == lu) {
    // center index carries weight zero
  } else {
    w[n - 1 - p] = -1;
  }
  return w;
}

// Sign pattern Σ = diag(1,..,1,-1,..,-1) used by sp(2l): X' = -ΣXΣ.
int sigma(std::size_t p, std::size_t l) { return p < l ? 1 : -1; }

/// Projects a matrix unit onto the algebra; zero when the position is
/// constrained away.
Matrix project_unit(LieType t, int l, std::size_t n, std::size_t p, std::size_t q) {
  Matrix e = matrix_unit(n, p, q);
  switch (t) {
    case LieType::A: return e;
    case LieType::B:
    case LieType::D: return e - antitranspose(e);
    case LieType::C: {
      const auto lu = static_cast<std::size_t>(l);
      Matrix et = antitranspose(e);
      // Σ E' Σ for a single unit
      const std::size_t r = n - 1 - q, c = n - 1 - p;
      et(r, c) *= sigma(r, lu) * sigma(c, lu);
      return e - et;
    }
  }
  return e;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix normalized(Matrix m) {
  for (const auto& x : m.entries()) {
    if (sgn(x) != 0) {
      const Rational inv = 1 / x;
      return m * inv;
    }
  }
  return m;
}

std::vector<Rational> flatten(const Matrix& m) { return m.entries(); }

}  // namespace

std::vector<int> MatrixLieAlgebra::position_weight(std::size_t row, std::size_t col) const {
  std::vector<int> w = weights_[row];
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= weights_[col][i];
  return w;
}

bool MatrixLieAlgebra::contains(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  const std::size_t l = static_cast<std::size_t>(rank());
  switch (type()) {
    case LieType::A: {
      Rational tr = 0;
      for (std::size_t i = 0; i < n_; ++i) tr += x(i, i);
      return sgn(tr) == 0;
    }
    case LieType::B:
    case LieType::D: return (x + antitranspose(x)).is_zero();
    case LieType::C: {
      Matrix xt = antitranspose(x);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (x(i, j) + sigma(i, l) * sigma(j, l) * xt(i, j) != 0) return false;
      return true;
    }
  }
  return false;
}

Vector MatrixLieAlgebra::coordinates(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw InvalidInput("coordinates: matrix has wrong size");
  const std::size_t d = dim();
  Vector c(d);
  Rational t;
  for (std::size_t k = 0; k < d; ++k) {
    const Rational& v = x.entries()[pivot_positions_[k]];
    if (sgn(v) == 0) continue;
    auto inv_row = pivot_inverse_.row(k);
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(inv_row[i]) == 0) continue;
      t = v * inv_row[i];
      c[i] += t;
    }
  }
  if (!(element(c) == x)) throw InvariantViolation("matrix is not in the span of the realized basis");
  return c;
}

Matrix MatrixLieAlgebra::element(const Vector& coeffs) const {
  if (coeffs.size() != dim()) throw InvalidInput("element: coefficient vector has wrong length");
  Matrix out(n_, n_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(coeffs[i]) != 0) out += basis_[i].matrix * coeffs[i];
  return out;
}

MatrixLieAlgebra realize(LieType type, int rank) {
  MatrixLieAlgebra alg;
  alg.roots_ = build_root_system(type, rank);
  const std::size_t n = matrix_size(type, rank);
  alg.n_ = n;
  for (std::size_t p = 0; p < n; ++p) alg.weights_.push_back(weight_of_index(type, rank, n, p));

  const RootSystem& rs = alg.roots_;
  // Cartan elements: diagonal realizations of the simple coroots 2α/(α,α).
  for (int j = 0; j < rank; ++j) {
    const auto& alpha = rs.simple_roots()[j];
    const int norm = dot(alpha, alpha);
    Matrix h(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      h(p, p) = Rational(2 * dot(alg.weights_[p], alpha), norm);
      h(p, p).canonicalize();
    }
    alg.basis_.push_back({std::move(h), {BasisTag::Kind::Cartan, static_cast<std::size_t>(j)}});
  }
  // Root vectors: first matrix position of the right weight that survives
  // projection onto the algebra, scaled so its leading entry is 1.
  for (std::size_t r = 0; r < rs.roots().size(); ++r) {
    const auto& lambda = rs.roots()[r].lambda;
    std::optional<Matrix> found;
    for (std::size_t p = 0; p < n && !found; ++p)
      for (std::size_t q = 0; q < n && !found; ++q) {
        if (p == q || alg.position_weight(p, q) != lambda) continue;
        Matrix e = project_unit(type, rank, n, p, q);
        if (!e.is_zero()) found = normalized(std::move(e));
      }
    if (!found) throw InvariantViolation("no root vector found for a root");
    // so(2l+1) with a unit center entry has no rational Chevalley basis;
    // doubling every negative root vector keeps all structure constants
    // integral (short roots then pair to their coroot, long ones to twice it).
    if (type == LieType::B && r >= rs.positive_roots().size()) *found = *found * Rational(2);
    alg.basis_.push_back({std::move(*found), {BasisTag::Kind::Root, r}});
  }

  for (const auto& b : alg.basis_)
    if (!alg.contains(b.matrix)) throw InvariantViolation("basis matrix violates the algebra's shape");

  // Coordinate solver: pick pivot positions from the echelon form of the
  // flattened basis and invert the basis restricted to them.
  const std::size_t d = alg.basis_.size();
  Matrix flat(d, n * n);
  for (std::size_t i = 0; i < d; ++i) {
    auto v = flatten(alg.basis_[i].matrix);
    std::copy(v.begin(), v.end(), flat.row(i).begin());
  }
  auto red = rref(flat);
  if (red.rank != d) throw InvariantViolation("realized basis is linearly dependent");
  alg.pivot_positions_ = red.pivot_columns;
  Matrix aug(d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) aug(k, i) = flat(i, alg.pivot_positions_[k]);
    aug(k, d + k) = 1;
  }
  // Row k of S is the pivot-position-k entries of all basis elements, so
  // coefficients c solve S c = x_p.
  auto inv = rref(std::move(aug));
  alg.pivot_inverse_ = Matrix(d, d);
  // pivot_inverse_(k, i) = (S^{-1})(i, k), stored by pivot position for a
  // sparse walk over the nonzero entries of x.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) alg.pivot_inverse_(k, i) = inv.reduced(i, d + k);

  // Structure constants.
  alg.table_ = StructureConstants(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      if (j < i) {
        Vector neg = alg.table_.bracket_basis(j, i);
        for (auto& x : neg) x = -x;
        alg.table_.set_bracket(i, j, neg);
        continue;
      }
      alg.table_.set_bracket(i, j, alg.coordinates(bracket(alg.basis_[i].matrix, alg.basis_[j].matrix)));
    }
  return alg;
}

}  // namespace gradedlie
