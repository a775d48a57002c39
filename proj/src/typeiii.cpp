#include "gradedlie/typeiii.hpp"

#include "gradedlie/classify.hpp"
#include "gradedlie/error.hpp"

namespace gradedlie {

namespace {

std::vector<int> lambda_diff(int dim, int plus, int minus) {
  std::vector<int> v(dim, 0);
  if (plus >= 0) v[plus] += 1;
  v[minus] -= 1;
  return v;
}

/// Coordinates of g-basis vector `parent` inside the degree -1 block of m.
Vector minus_one_unit(const SymbolAlgebra& m, std::size_t parent) {
  auto a = m.index_of_parent(parent);
  if (!a || m.degree(*a) != -1) throw InvalidInput("root vector is not in g_-1");
  Vector v(m.block_dim(-1));
  v[*a - m.block_offset(-1)] = 1;
  return v;
}

}  // namespace

Decomposition decompose(const GradedLieAlgebra& g) {
  const auto& alg = g.algebra();
  const LieType t = alg.type();
  const int l = alg.rank();
  const auto rec = classify(t, l, g.delta1());
  if (rec.verdict != Verdict::TypeIII) throw InvalidInput("decomposition needs a type III gradation");
  if (t != LieType::A && t != LieType::C)
    throw InvalidInput("decomposition is built in the A or C realization; use " + rec.canonical.to_string());
  const bool mirrored = g.delta1() != rec.canonical.delta1;
  const int k = rec.canonical.delta1.indices()[1];
  const RootSystem& rs = alg.root_system();
  const int d = rs.lambda_dim();

  // 1-based λ indices as in the root lists.
  std::vector<std::vector<int>> r1, r2;
  if (t == LieType::A) {
    for (int i = k + 1; i <= l + 1; ++i)
      for (int j = 2; j <= k; ++j) r1.push_back(lambda_diff(d, i - 1, j - 1));
    for (int i = 2; i <= k; ++i) r2.push_back(lambda_diff(d, i - 1, 0));
  } else {
    for (int i = 2; i <= l; ++i)
      for (int j = i; j <= l; ++j) {
        std::vector<int> v(d, 0);
        v[i - 1] -= 1;
        v[j - 1] -= 1;
        r1.push_back(v);
      }
    for (int i = 2; i <= l; ++i) r2.push_back(lambda_diff(d, i - 1, 0));
  }

  const SymbolAlgebra m = symbol(g);
  Decomposition out;
  auto collect = [&](const std::vector<std::vector<int>>& roots, std::vector<std::size_t>& idx) {
    std::vector<Vector> vecs;
    for (const auto& lam : roots) {
      auto r = rs.find_lambda(lam);
      if (!r) throw InvariantViolation("listed vector is not a root");
      std::size_t root = *r;
      if (mirrored) root = *rs.find_coeffs(apply_diagram_automorphism(t, l, rs.roots()[root].coeffs));
      if (degree_of_root(rs.roots()[root], g.delta1()) != -1)
        throw InvariantViolation("listed root does not have degree -1");
      idx.push_back(root);
      vecs.push_back(minus_one_unit(m, alg.root_basis_index(root)));
    }
    return Subspace::span(vecs, m.block_dim(-1));
  };
  out.part1 = collect(r1, out.part1_roots);
  out.part2 = collect(r2, out.part2_roots);
  if (out.part1.dim() != out.part1_roots.size() || out.part2.dim() != out.part2_roots.size() ||
      out.part1.dim() + out.part2.dim() != m.block_dim(-1) || intersect(out.part1, out.part2).dim() != 0)
    throw InvariantViolation("g_-1 is not the direct sum of the two parts");
  return out;
}

Subspace g0_preserving(const ProlongationTower& tower, const Decomposition& d) {
  const ProlongationLevel& l0 = tower.level(0);
  const SymbolAlgebra& m = tower.symbol();
  const std::size_t n1 = m.block_dim(-1);
  std::vector<Vector> rows;
  for (const Subspace* part : {&d.part1, &d.part2}) {
    const Matrix ann = part->annihilator();
    for (std::size_t p = 0; p < part->dim(); ++p) {
      auto v = part->basis().row(p);
      // w · φ(v) = Σ_j c_j Σ_a v_a w · φ_j(x_a)
      for (std::size_t w = 0; w < ann.rows(); ++w) {
        Vector row(l0.dim());
        for (std::size_t j = 0; j < l0.dim(); ++j) {
          auto tab = l0.space.basis().row(j);
          for (std::size_t a = 0; a < n1; ++a) {
            if (sgn(v[a]) == 0) continue;
            for (std::size_t r = 0; r < n1; ++r) row[j] += v[a] * ann(w, r) * tab[l0.offsets[a] + r];
          }
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Subspace::full(l0.dim());
  return kernel_basis(Matrix::from_rows(rows, l0.dim()));
}

LemmaReport lemma_equation_count(int l) {
  if (l < 3) throw InvalidInput("the equation count needs l >= 3");
  LemmaReport rep;
  rep.l = l;
  const std::size_t n = static_cast<std::size_t>(l - 1);
  rep.ambient_dim = 2 * n * n;
  auto a_idx = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); };
  auto b_idx = [n](std::size_t i, std::size_t j) { return n * n + (i - 1) * n + (j - 1); };

  rep.equations = Matrix(0, rep.ambient_dim);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      Vector row(rep.ambient_dim);
      row[a_idx(i, j)] = 1;
      row[b_idx(j, i)] = 1;
      rep.equations.append_row(row);
    }
  for (std::size_t i = 2; i <= n; ++i) {
    Vector row(rep.ambient_dim);
    row[a_idx(i, i)] += 1;
    row[b_idx(i, i)] += 1;
    row[a_idx(1, 1)] -= 1;
    row[b_idx(1, 1)] -= 1;
    rep.equations.append_row(row);
  }
  rep.equation_rank = rank(rep.equations);
  const Subspace kernel = kernel_basis(rep.equations);
  rep.g0_prime_dim = kernel.dim();

  auto g = grade(realize(LieType::A, l), MarkedSet({1, l}));
  rep.g0_dim = g.dim_part(0);
  const auto& alg = g.algebra();
  ProlongationTower tower(symbol(g));
  const SymbolAlgebra& m = tower.symbol();
  const std::size_t n1 = m.block_dim(-1);
  const std::size_t size = static_cast<std::size_t>(l + 1);

  // e_i, f_i and h in m coordinates.
  auto in_m = [&](const Matrix& x) {
    Vector full = alg.coordinates(x);
    Vector v(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a) v[a] = full[*m.parent_index(a)];
    return v;
  };
  std::vector<Vector> e, f;
  for (std::size_t i = 1; i <= n; ++i) {
    e.push_back(in_m(matrix_unit(size, l, i)));
    f.push_back(in_m(matrix_unit(size, i, 0)));
  }
  const Vector h = in_m(matrix_unit(size, l, 0));

  rep.relations_hold = true;
  const Vector zero(m.dim());
  std::optional<Rational> scale;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m.table().bracket(e[i], e[j]) != zero || m.table().bracket(f[i], f[j]) != zero) rep.relations_hold = false;
      Vector fe = m.table().bracket(f[i], e[j]);
      if (i != j) {
        if (fe != zero) rep.relations_hold = false;
        continue;
      }
      // fe must be a multiple of h.
      std::size_t p = 0;
      while (p < h.size() && sgn(h[p]) == 0) ++p;
      Rational c = fe[p] / h[p];
      Vector ch = h;
      for (auto& x : ch) x *= c;
      if (fe != ch || (scale && *scale != c)) rep.relations_hold = false;
      scale = c;
    }
  rep.bracket_scale = scale.value_or(0);

  // Restriction of level-0 elements to (a, b) coordinates.
  Matrix e_rows(0, n1), f_rows(0, n1);
  for (std::size_t i = 0; i < n; ++i) {
    e_rows.append_row(std::span<const Rational>(e[i]).subspan(0, n1));
    f_rows.append_row(std::span<const Rational>(f[i]).subspan(0, n1));
  }
  const Matrix et = e_rows.transpose(), ft = f_rows.transpose();
  const ProlongationLevel& l0 = tower.level(0);
  auto restrict_to_ab = [&](std::span<const Rational> coords) {
    Vector table(l0.table_size);
    for (std::size_t j = 0; j < l0.dim(); ++j) {
      if (sgn(coords[j]) == 0) continue;
      auto row = l0.space.basis().row(j);
      for (std::size_t p = 0; p < table.size(); ++p) table[p] += coords[j] * row[p];
    }
    Vector ab(rep.ambient_dim);
    for (std::size_t i = 0; i < n; ++i) {
      // φ(e_i) = Σ_a e_i[a] φ(x_a)
      Vector img_e(n1), img_f(n1);
      for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t r = 0; r < n1; ++r) {
          img_e[r] += e[i][a] * table[l0.offsets[a] + r];
          img_f[r] += f[i][a] * table[l0.offsets[a] + r];
        }
      auto ce = solve(et, img_e);
      auto cf = solve(ft, img_f);
      if (!ce || !cf) return std::optional<Vector>();
      for (std::size_t j = 0; j < n; ++j) {
        ab[a_idx(i + 1, j + 1)] = (*ce)[j];
        ab[b_idx(i + 1, j + 1)] = (*cf)[j];
      }
    }
    return std::optional<Vector>(ab);
  };
  auto image = [&](const Subspace& s) -> std::optional<Subspace> {
    std::vector<Vector> vecs;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      auto ab = restrict_to_ab(s.basis().row(i));
      if (!ab) return std::nullopt;
      vecs.push_back(std::move(*ab));
    }
    Subspace img = Subspace::span(vecs, rep.ambient_dim);
    if (img.dim() != s.dim()) return std::nullopt;
    return img;
  };

  const Decomposition d = decompose(g);
  const Subspace preserving = g0_preserving(tower, d);
  rep.constraint_dim = preserving.dim();
  auto from_constraints = image(preserving);
  auto from_iota = image(embedded_g0(g, tower));
  rep.kernel_equals_constraint = from_constraints && *from_constraints == kernel;
  rep.kernel_equals_iota = from_iota && *from_iota == kernel;
  return rep;
}

}  // namespace gradedlie
