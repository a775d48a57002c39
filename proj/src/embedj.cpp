#include "gradedlie/embedj.hpp"

#include "gradedlie/error.hpp"
#include "gradedlie/grading.hpp"

namespace gradedlie {

Matrix tilde(const Matrix& x, CenterSplit split) {
  const std::size_t n = x.rows();
  if (x.cols() != n || n % 2 == 0 || n < 3) throw InvalidInput("tilde expects an odd square matrix");
  const std::size_t c = n / 2;
  // Source index -> target index for everything except the center.
  auto to = [c](std::size_t i) { return i < c ? i : i + 1; };
  const Rational half(1, 2);
  const bool iso = split == CenterSplit::Isometric;
  Matrix y(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == c && j == c) continue;
      if (j == c) {
        // Column a (upper) or -ξ' (lower).
        y(to(i), c) = iso ? x(i, c) * half : x(i, c);
        y(to(i), c + 1) = x(i, c);
      } else if (i == c) {
        // Row ξ (left) or -a' (right).
        y(c, to(j)) = x(c, j);
        y(c + 1, to(j)) = iso ? x(c, j) * half : x(c, j);
      } else {
        y(to(i), to(j)) = x(i, j);
      }
    }
  return y;
}

std::vector<std::pair<std::string, bool>> EmbeddingReport::checks() const {
  return {{"lands_in_target", lands_in_target},
          {"homomorphism", homomorphism},
          {"injective", injective},
          {"parabolic_compat", parabolic_compat},
          {"nilradical_match", nilradical_match}};
}

bool EmbeddingReport::all_passed() const {
  for (const auto& [name, ok] : checks())
    if (!ok) return false;
  return true;
}

namespace {

/// Shared checks for a linear map given by images of the source basis.
/// Returns images in target coordinates, or sets lands_in_target = false.
std::vector<Vector> map_basis(const MatrixLieAlgebra& src, const MatrixLieAlgebra& tgt,
                              const std::vector<Matrix>& images, EmbeddingReport& rep) {
  rep.source_dim = src.dim();
  rep.target_dim = tgt.dim();
  rep.lands_in_target = true;
  std::vector<Vector> coords;
  for (const auto& y : images) {
    if (!tgt.contains(y)) {
      rep.lands_in_target = false;
      return {};
    }
    coords.push_back(tgt.coordinates(y));
  }
  rep.injective = Subspace::span(coords, tgt.dim()).dim() == src.dim();
  rep.homomorphism = true;
  const auto& sc = src.structure_constants();
  for (std::size_t i = 0; i < src.dim() && rep.homomorphism; ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      Matrix lhs(images[i].rows(), images[i].cols());
      for (const auto& [k, c] : sc.at(i, j)) lhs += images[k] * c;
      if (!(lhs == bracket(images[i], images[j]))) {
        rep.homomorphism = false;
        break;
      }
    }
  return coords;
}

Subspace image_of(const std::vector<Vector>& coords, const Subspace& part, std::size_t target_dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < part.dim(); ++i) {
    Vector v(target_dim);
    auto c = part.basis().row(i);
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (sgn(c[b]) == 0) continue;
      for (std::size_t k = 0; k < target_dim; ++k) v[k] += c[b] * coords[b][k];
    }
    out.push_back(std::move(v));
  }
  return Subspace::span(out, target_dim);
}

}  // namespace

EmbeddingReport embed_so(int l, CenterSplit split) { return embed_so(l, split, MarkedSet({1}), MarkedSet({1})); }

EmbeddingReport embed_so(int l, CenterSplit split, const MarkedSet& source_mark, const MarkedSet& target_mark) {
  if (l < 2) throw InvalidInput("embed_so needs l >= 2");
  auto src = std::make_shared<const MatrixLieAlgebra>(realize(LieType::B, l));
  auto tgt = std::make_shared<const MatrixLieAlgebra>(realize(LieType::D, l + 1));
  EmbeddingReport rep;
  rep.source = "(B," + std::to_string(l) + ",{" + source_mark.to_string() + "})";
  rep.target = "(D," + std::to_string(l + 1) + ",{" + target_mark.to_string() + "})";
  std::vector<Matrix> images;
  for (const auto& b : src->basis()) images.push_back(tilde(b.matrix, split));
  auto coords = map_basis(*src, *tgt, images, rep);
  if (!rep.lands_in_target) return rep;

  const auto gs = grade(src, source_mark);
  const auto gt = grade(tgt, target_mark);
  const Subspace jg = image_of(coords, Subspace::full(src->dim()), tgt->dim());
  const Subspace jp = image_of(coords, gs.parabolic(), tgt->dim());
  const Subspace jn = image_of(coords, gs.nilradical(), tgt->dim());
  const Subspace cap = intersect(gt.parabolic(), jg);
  rep.dim_jp = jp.dim();
  rep.dim_p_cap_jg = cap.dim();
  rep.parabolic_compat = jp == cap;
  rep.dim_jn = jn.dim();
  rep.dim_n_target = gt.nilradical().dim();
  rep.dim_jn_cap_n_target = intersect(jn, gt.nilradical()).dim();
  rep.nilradical_match = jn == gt.nilradical();
  rep.dim_m = gs.negative_part().dim();
  rep.dim_m_target = gt.negative_part().dim();
  return rep;
}

EmbeddingReport embed_sp(int l) {
  if (l < 2) throw InvalidInput("embed_sp needs l >= 2");
  auto src = std::make_shared<const MatrixLieAlgebra>(realize(LieType::C, l));
  auto tgt = std::make_shared<const MatrixLieAlgebra>(realize(LieType::A, 2 * l - 1));
  EmbeddingReport rep;
  rep.source = "(C," + std::to_string(l) + ",{1})";
  rep.target = "(A," + std::to_string(2 * l - 1) + ",{1})";
  std::vector<Matrix> images;
  for (const auto& b : src->basis()) images.push_back(b.matrix);
  auto coords = map_basis(*src, *tgt, images, rep);
  if (!rep.lands_in_target) return rep;

  const auto gs = grade(src, MarkedSet({1}));
  const auto gt = grade(tgt, MarkedSet({1}));
  const Subspace jp = image_of(coords, gs.parabolic(), tgt->dim());
  rep.dim_jp = jp.dim();
  rep.parabolic_compat = gt.parabolic().contains(jp);
  rep.dim_m = gs.negative_part().dim();
  rep.dim_m_target = gt.negative_part().dim();
  rep.dim_jn = gs.nilradical().dim();
  rep.dim_n_target = gt.nilradical().dim();

  // m → m̃: read off the first column below the diagonal.
  const std::size_t n = src->matrix_size();
  const Subspace m = gs.negative_part();
  Matrix proj(m.dim(), n - 1);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Matrix x = src->element(m.basis_vector(i));
    for (std::size_t r = 1; r < n; ++r) proj(i, r - 1) = x(r, 0);
  }
  rep.nilradical_match = rep.dim_m == rep.dim_m_target && rank(proj) == rep.dim_m && rep.dim_m == n - 1;

  const Matrix corner = matrix_unit(n, 0, n - 1);
  const auto degree_in = [&](const GradedLieAlgebra& g) {
    Vector v = g.algebra().coordinates(corner);
    std::optional<int> d;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        if (d && *d != g.degree_of(i)) throw InvariantViolation("corner entry is not homogeneous");
        d = g.degree_of(i);
      }
    return d.value_or(0);
  };
  rep.corner_source_degree = degree_in(gs);
  rep.corner_target_degree = degree_in(gt);
  return rep;
}

}  // namespace gradedlie
