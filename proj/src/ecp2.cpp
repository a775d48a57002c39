#include "gradedlie/ecp2.hpp"

#include <sstream>

#include "gradedlie/error.hpp"
#include "gradedlie/grading.hpp"

namespace gradedlie {

Polynomial::Polynomial(const Rational& c) { add_term({0, 0, 0, 0}, c); }

Polynomial Polynomial::var(int i) {
  if (i < 0 || i >= kVars) throw InvalidInput("variable index out of range");
  Polynomial p;
  Exponent e{};
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : o.terms_) {
      Exponent g;
      for (std::size_t i = 0; i < kVars; ++i) g[i] = e[i] + f[i];
      r.add_term(g, c * d);
    }
  return r;
}

Rational Polynomial::evaluate(const std::array<Rational, kVars>& at) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kVars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= at[i];
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::array<Polynomial, kVars>& images) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Polynomial t(c);
    for (std::size_t i = 0; i < kVars; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * images[i];
    r = r + t;
  }
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial r;
  const auto u = static_cast<std::size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[u] == 0) continue;
    Exponent f = e;
    --f[u];
    r.add_term(f, c * Rational(e[u]));
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << gradedlie::to_string(c);
    for (std::size_t i = 0; i < kVars; ++i)
      if (e[i] > 0) os << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

bool is_identity(const PolyMatrix& m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!(m[i][j] == Polynomial(i == j ? 1L : 0L))) return false;
  return true;
}

Matrix PolynomialMatrixFamily::at(const Rational& a1, const Rational& a2) const {
  Matrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = entries[i][j].evaluate({a1, a2, 0, 0});
  return out;
}

PolyMatrix PolynomialMatrixFamily::substituted(const Polynomial& a1, const Polynomial& a2) const {
  PolyMatrix out;
  const std::array<Polynomial, Polynomial::kVars> images{a1, a2, Polynomial::var(2), Polynomial::var(3)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = entries[i][j].substitute(images);
  return out;
}

namespace {

PolynomialMatrixFamily unit_family(std::string name) {
  PolynomialMatrixFamily m;
  m.name = std::move(name);
  for (std::size_t i = 0; i < 3; ++i) m.entries[i][i] = Polynomial(1L);
  return m;
}

}  // namespace

PolynomialMatrixFamily build_M2_with(const Rational& coefficient) {
  const auto a1 = Polynomial::var(0), a2 = Polynomial::var(1);
  auto m = unit_family("M2");
  m.entries[0][1] = a1;
  m.entries[0][2] = a2 + Polynomial(coefficient) * a1 * a1;
  m.entries[1][2] = a1;
  return m;
}

PolynomialMatrixFamily build_M(int variant) {
  if (variant == 2) return build_M2_with(Rational(1, 2));
  if (variant != 1) throw InvalidInput("variant must be 1 or 2");
  auto m = unit_family("M1");
  m.entries[0][1] = Polynomial::var(0);
  m.entries[0][2] = Polynomial::var(1);
  return m;
}

bool verify_homomorphism(const PolynomialMatrixFamily& m) {
  const auto a1 = Polynomial::var(0), a2 = Polynomial::var(1);
  const auto b1 = Polynomial::var(2), b2 = Polynomial::var(3);
  const PolyMatrix lhs = m.substituted(a1, a2) * m.substituted(b1, b2);
  return lhs == m.substituted(a1 + b1, a2 + b2);
}

Polynomial determinant(const PolynomialMatrixFamily& m) {
  const auto& e = m.entries;
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

bool inverse_is_negation(const PolynomialMatrixFamily& m) {
  const auto a1 = Polynomial::var(0), a2 = Polynomial::var(1);
  return is_identity(m.substituted(a1, a2) * m.substituted(-a1, -a2));
}

std::size_t orbit_rank(const PolynomialMatrixFamily& m, OrbitAction action, const Vector& base) {
  if (base.size() != 3 || is_zero(base)) throw InvalidInput("base point must be a nonzero 3-vector");
  Matrix jac(3, 3);
  for (std::size_t v = 0; v < 2; ++v) {
    for (std::size_t i = 0; i < 3; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        const auto& entry = action == OrbitAction::Transpose ? m.entries[j][i] : m.entries[i][j];
        s += entry.derivative(static_cast<int>(v)).evaluate({0, 0, 0, 0}) * base[j];
      }
      jac(v, i) = s;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) jac(2, i) = base[i];
  return rank(jac) - 1;
}

std::size_t open_orbit_rank(const PolynomialMatrixFamily& m) {
  return orbit_rank(m, OrbitAction::Transpose, Vector{Rational(1), Rational(0), Rational(0)});
}

int unipotent_index(const Matrix& g) {
  const std::size_t n = g.rows();
  if (g.cols() != n) throw InvalidInput("unipotent_index needs a square matrix");
  const Matrix x = g - Matrix::identity(n);
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * x;
    if (p.is_zero()) return static_cast<int>(k);
  }
  throw InvalidInput("matrix is not unipotent");
}

namespace {

bool square_vanishes(const PolynomialMatrixFamily& m) {
  PolyMatrix x = m.entries;
  for (std::size_t i = 0; i < 3; ++i) x[i][i] = x[i][i] - Polynomial(1L);
  const PolyMatrix sq = x * x;
  for (const auto& row : sq)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

int max_index(const PolynomialMatrixFamily& m) {
  int best = 1;
  for (int a1 = -1; a1 <= 1; ++a1)
    for (int a2 = -1; a2 <= 1; ++a2) best = std::max(best, unipotent_index(m.at(a1, a2)));
  return best;
}

}  // namespace

Distinction distinguish(const PolynomialMatrixFamily& m1, const PolynomialMatrixFamily& m2) {
  if (!verify_homomorphism(m1) || !verify_homomorphism(m2))
    throw InvalidInput("distinguish needs two homomorphisms");
  Distinction d;
  d.index1 = max_index(m1);
  d.index2 = max_index(m2);
  d.square_zero1 = square_vanishes(m1);
  d.square_zero2 = square_vanishes(m2);
  // The sample must agree with the symbolic square.
  if (d.square_zero1 != (d.index1 <= 2) || d.square_zero2 != (d.index2 <= 2))
    throw InvariantViolation("sampled unipotent index disagrees with the symbolic square");
  d.distinct = d.index1 != d.index2;
  return d;
}

bool image_in_first_row_radical(const PolynomialMatrixFamily& m) {
  const auto g = grade(realize(LieType::A, 2), MarkedSet({1}));
  const Subspace g1 = g.part(1);
  for (int a1 = -2; a1 <= 2; ++a1)
    for (int a2 = -2; a2 <= 2; ++a2) {
      const Matrix x = m.at(a1, a2) - Matrix::identity(3);
      if (!g.algebra().contains(x) || !g1.contains(g.algebra().coordinates(x))) return false;
    }
  return true;
}

}  // namespace gradedlie
