#include "gradedlie/prolong.hpp"

#include "gradedlie/error.hpp"

namespace gradedlie {

Vector ProlongationLevel::value(std::span<const Rational> table, std::size_t b) const {
  auto s = table.subspan(offsets[b], widths[b]);
  return Vector(s.begin(), s.end());
}

// ------------------------------------------------------- ProlongationTower

ProlongationTower::ProlongationTower(SymbolAlgebra m) : ProlongationTower(std::move(m), nullptr) { extend(); }

ProlongationTower::ProlongationTower(SymbolAlgebra m, std::nullptr_t) : m_(std::move(m)) {
  action_.resize(static_cast<std::size_t>(m_.depth()));
  for (int t = -m_.depth(); t < 0; ++t)
    for (std::size_t b = 0; b < m_.dim(); ++b) {
      const int s = t + m_.degree(b);
      Matrix l(target_dim(s), target_dim(t));
      const std::size_t off_t = m_.block_offset(t), off_s = m_.block_offset(s);
      for (std::size_t i = 0; i < l.cols(); ++i)
        for (const auto& [c, coef] : m_.table().at(off_t + i, b)) l(c - off_s, i) = coef;
      action_[static_cast<std::size_t>(t + m_.depth())].push_back(std::move(l));
    }
}

ProlongationTower::ProlongationTower(SymbolAlgebra m, const std::vector<Vector>& level0_tables)
    : ProlongationTower(std::move(m), nullptr) {
  ProlongationLevel level = layout(0);
  for (const auto& t : level0_tables) {
    if (t.size() != level.table_size) throw InvalidInput("level-0 table has the wrong size");
    if (!is_derivation(0, t)) throw InvalidInput("level-0 table is not a derivation of m");
  }
  level.space = Subspace::span(level0_tables, level.table_size);
  add_level(std::move(level));
}

std::size_t ProlongationTower::target_dim(int t) const {
  if (t < 0) return t < -m_.depth() ? 0 : m_.block_dim(t);
  if (t > top()) throw InvariantViolation("prolongation level " + std::to_string(t) + " is not computed yet");
  return levels_[static_cast<std::size_t>(t)].dim();
}

const Matrix& ProlongationTower::action(int t, std::size_t b) const {
  return action_.at(static_cast<std::size_t>(t + m_.depth())).at(b);
}

std::vector<std::size_t> ProlongationTower::dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.dim());
  return out;
}

ProlongationLevel ProlongationTower::layout(int k) const {
  ProlongationLevel level;
  level.degree = k;
  for (std::size_t b = 0; b < m_.dim(); ++b) {
    level.offsets.push_back(level.table_size);
    level.widths.push_back(target_dim(k + m_.degree(b)));
    level.table_size += level.widths.back();
  }
  level.space = Subspace(level.table_size);
  return level;
}

void ProlongationTower::add_level(ProlongationLevel level) {
  levels_.push_back(std::move(level));
  const ProlongationLevel& lv = levels_.back();
  std::vector<Matrix> maps;
  for (std::size_t b = 0; b < m_.dim(); ++b) {
    Matrix l(lv.widths[b], lv.dim());
    for (std::size_t i = 0; i < lv.dim(); ++i) {
      auto row = lv.space.basis().row(i);
      for (std::size_t r = 0; r < lv.widths[b]; ++r) l(r, i) = row[lv.offsets[b] + r];
    }
    maps.push_back(std::move(l));
  }
  action_.push_back(std::move(maps));
}

Vector ProlongationTower::residual(int k, std::span<const Rational> u, std::size_t a, std::size_t b) const {
  return residual_in(k <= top() ? level(k) : layout(k), u, a, b);
}

Vector ProlongationTower::residual_in(const ProlongationLevel& shape, std::span<const Rational> u, std::size_t a,
                                      std::size_t b) const {
  const int k = shape.degree;
  const int s = k + m_.degree(a) + m_.degree(b);
  Vector out(target_dim(s));
  if (out.empty()) return out;
  for (const auto& [c, coef] : m_.table().at(a, b))
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += coef * u[shape.offsets[c] + r];
  Vector ua = shape.value(u, a), ub = shape.value(u, b);
  Vector t1 = action(k + m_.degree(a), b) * std::span<const Rational>(ua);
  Vector t2 = action(k + m_.degree(b), a) * std::span<const Rational>(ub);
  for (std::size_t r = 0; r < out.size(); ++r) out[r] += t2[r] - t1[r];
  return out;
}

bool ProlongationTower::is_derivation(int k, std::span<const Rational> table) const {
  for (std::size_t a = 0; a < m_.dim(); ++a)
    for (std::size_t b = a + 1; b < m_.dim(); ++b)
      if (!is_zero(residual(k, table, a, b))) return false;
  return true;
}

ProlongationLevel ProlongationTower::solve_level(int k) const {
  ProlongationLevel level = layout(k);
  const std::size_t n1 = m_.block_dim(-1);
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = a + 1; b < m_.dim(); ++b) {
      const int s = k - 1 + m_.degree(b);
      const std::size_t width = target_dim(s);
      if (width == 0) continue;
      const Matrix& la = action(k - 1, b);
      const Matrix& lb = action(k + m_.degree(b), a);
      for (std::size_t r = 0; r < width; ++r) {
        Vector row(level.table_size);
        for (const auto& [c, coef] : m_.table().at(a, b)) row[level.offsets[c] + r] += coef;
        for (std::size_t i = 0; i < la.cols(); ++i)
          if (sgn(la(r, i)) != 0) row[level.offsets[a] + i] -= la(r, i);
        for (std::size_t i = 0; i < lb.cols(); ++i)
          if (sgn(lb(r, i)) != 0) row[level.offsets[b] + i] += lb(r, i);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  if (rows.empty())
    level.space = Subspace::full(level.table_size);
  else
    level.space = kernel_basis(Matrix::from_rows(rows, level.table_size));
  return level;
}

const ProlongationLevel& ProlongationTower::extend() {
  const int k = levels_.empty() ? 0 : top() + 1;
  ProlongationLevel level = solve_level(k);
  // The equations only used pairs with one factor in g_-1; the rest must
  // follow because m is generated in degree -1.
  for (std::size_t i = 0; i < level.dim(); ++i) {
    Vector t = level.basis_table(i);
    for (std::size_t a = 0; a < m_.dim(); ++a)
      for (std::size_t b = a + 1; b < m_.dim(); ++b)
        if (!is_zero(residual_in(level, t, a, b)))
          throw InvariantViolation("prolongation level " + std::to_string(k) + " fails the derivation identity");
  }
  add_level(std::move(level));
  return levels_.back();
}

void ProlongationTower::extend_to(int k) {
  while (top() < k) extend();
}

Matrix ProlongationTower::level0_matrix(std::span<const Rational> table) const {
  const ProlongationLevel& lv = level(0);
  Matrix x(m_.dim(), m_.dim());
  for (std::size_t b = 0; b < m_.dim(); ++b) {
    const std::size_t off = m_.block_offset(m_.degree(b));
    for (std::size_t r = 0; r < lv.widths[b]; ++r) x(off + r, b) = table[lv.offsets[b] + r];
  }
  return x;
}

Vector ProlongationTower::level0_table(const Matrix& endo) const {
  const ProlongationLevel& lv = level(0);
  Vector out(lv.table_size);
  for (std::size_t b = 0; b < m_.dim(); ++b) {
    const std::size_t off = m_.block_offset(m_.degree(b));
    for (std::size_t r = 0; r < m_.dim(); ++r) {
      if (sgn(endo(r, b)) == 0) continue;
      if (r < off || r >= off + lv.widths[b]) throw InvalidInput("endomorphism does not preserve degrees");
      out[lv.offsets[b] + r - off] = endo(r, b);
    }
  }
  return out;
}

Vector ProlongationTower::level0_bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  Matrix mu = level0_matrix(u), mv = level0_matrix(v);
  return level0_table(mu * mv - mv * mu);
}

ProlongationLevel prolong_level0(const SymbolAlgebra& m) {
  ProlongationTower tower(m);
  return tower.level(0);
}

const ProlongationLevel& prolong_next(ProlongationTower& tower) { return tower.extend(); }

int default_cap(const SymbolAlgebra& m) { return m.depth() + 2; }

// ------------------------------------------------------------- embedding

namespace {

/// Value table of y ∈ g_t under ι, given ι on lower nonnegative degrees.
Vector raw_table(const GradedLieAlgebra& g, const ProlongationTower& tower, const std::vector<Matrix>& iota, int t,
                 const Vector& y) {
  const SymbolAlgebra& m = tower.symbol();
  const ProlongationLevel& lv = tower.level(t);
  Vector table(lv.table_size);
  const auto& sc = g.table();
  for (std::size_t b = 0; b < m.dim(); ++b) {
    Vector z(g.algebra().dim());
    const std::size_t pb = *m.parent_index(b);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (sgn(y[i]) == 0) continue;
      for (const auto& [k, c] : sc.at(i, pb)) z[k] += y[i] * c;
    }
    const int s = t + m.degree(b);
    if (s < 0) {
      const std::size_t off = m.block_offset(s);
      for (std::size_t r = 0; r < lv.widths[b]; ++r) table[lv.offsets[b] + r] = z[*m.parent_index(off + r)];
    } else {
      const auto idx = g.basis_of_degree(s);
      const Matrix& map = iota[static_cast<std::size_t>(s)];
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (sgn(z[idx[q]]) == 0) continue;
        for (std::size_t r = 0; r < lv.widths[b]; ++r) table[lv.offsets[b] + r] += z[idx[q]] * map(q, r);
      }
    }
  }
  return table;
}

std::vector<Matrix> embed_up_to(const GradedLieAlgebra& g, ProlongationTower& tower, int k) {
  if (!tower.symbol().parent_index(0)) throw InvalidInput("symbol algebra was not built from this graded algebra");
  tower.extend_to(k);
  std::vector<Matrix> iota;
  for (int t = 0; t <= k; ++t) {
    const auto idx = g.basis_of_degree(t);
    const ProlongationLevel& lv = tower.level(t);
    Matrix map(idx.size(), lv.dim());
    for (std::size_t q = 0; q < idx.size(); ++q) {
      Vector y(g.algebra().dim());
      y[idx[q]] = 1;
      auto coords = lv.space.coordinates(raw_table(g, tower, iota, t, y));
      if (!coords) throw InvariantViolation("ι maps a degree-" + std::to_string(t) + " element outside the prolongation");
      std::copy(coords->begin(), coords->end(), map.row(q).begin());
    }
    iota.push_back(std::move(map));
  }
  return iota;
}

}  // namespace

Matrix embed_positive(const GradedLieAlgebra& g, ProlongationTower& tower, int k) {
  if (k < 0) throw InvalidInput("ι is defined on nonnegative degrees");
  return embed_up_to(g, tower, k).back();
}

Vector embed_table(const GradedLieAlgebra& g, ProlongationTower& tower, int k, const Vector& element) {
  auto iota = embed_up_to(g, tower, k);
  iota.pop_back();
  return raw_table(g, tower, iota, k, element);
}

Subspace embedded_g0(const GradedLieAlgebra& g, ProlongationTower& tower) {
  return Subspace::span(embed_positive(g, tower, 0));
}

// --------------------------------------------------- restricted tower

std::vector<std::size_t> RestrictedProlongation::dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.dim());
  return out;
}

RestrictedProlongation restricted_prolong(ProlongationTower& tower, const Subspace& g0, int cap) {
  const ProlongationLevel& l0 = tower.level(0);
  if (g0.ambient_dim() != l0.dim()) throw InvalidInput("g0 must be given in level-0 coordinates");
  std::vector<Vector> tables;
  for (std::size_t i = 0; i < g0.dim(); ++i) {
    Vector t(l0.table_size);
    auto c = g0.basis().row(i);
    for (std::size_t j = 0; j < l0.dim(); ++j) {
      if (sgn(c[j]) == 0) continue;
      auto row = l0.space.basis().row(j);
      for (std::size_t p = 0; p < t.size(); ++p) t[p] += c[j] * row[p];
    }
    tables.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      auto coords = l0.space.coordinates(tower.level0_bracket(tables[i], tables[j]));
      if (!coords || !g0.contains(*coords)) throw InvalidInput("g0 is not a subalgebra of the degree-0 derivations");
    }

  tower.extend_to(cap);
  RestrictedProlongation out;
  out.levels.push_back(g0);
  const std::size_t n1 = tower.symbol().block_dim(-1);
  for (int k = 1; k <= cap; ++k) {
    const ProlongationLevel& lv = tower.level(k);
    const Subspace& prev = out.levels.back();
    if (prev.dim() == prev.ambient_dim()) {
      out.levels.push_back(Subspace::full(lv.dim()));
      continue;
    }
    const Matrix ann = prev.annihilator();
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < n1; ++a) {
      // Column i: u_i(x_a) in level-(k-1) coordinates.
      const Matrix& va = tower.action(k, a);
      for (std::size_t r = 0; r < ann.rows(); ++r) {
        Vector row(lv.dim());
        for (std::size_t i = 0; i < lv.dim(); ++i)
          for (std::size_t q = 0; q < va.rows(); ++q) row[i] += ann(r, q) * va(q, i);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
    out.levels.push_back(rows.empty() ? Subspace::full(lv.dim()) : kernel_basis(Matrix::from_rows(rows, lv.dim())));
  }
  return out;
}

}  // namespace gradedlie
