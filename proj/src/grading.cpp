#include "gradedlie/grading.hpp"

#include <algorithm>
#include <sstream>

#include "gradedlie/error.hpp"

namespace gradedlie {

namespace {

std::vector<std::size_t> indices_with_degree(const std::vector<int>& degrees, int k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == k) out.push_back(i);
  return out;
}

GradationCheck check_lie_bracket(const StructureConstants& table) {
  if (auto f = table.antisymmetry_failure())
    return {"lie_bracket", false,
            "antisymmetry fails for basis pair (" + std::to_string(f->first) + "," + std::to_string(f->second) + ")"};
  if (auto f = table.jacobi_failure())
    return {"lie_bracket", false,
            "Jacobi fails for (" + std::to_string((*f)[0]) + "," + std::to_string((*f)[1]) + "," +
                std::to_string((*f)[2]) + ")"};
  return {"lie_bracket", true, ""};
}

GradationCheck check_bracket_grading(const StructureConstants& table, const std::vector<int>& degrees) {
  for (std::size_t i = 0; i < table.dim(); ++i)
    for (std::size_t j = 0; j < table.dim(); ++j)
      for (const auto& [k, c] : table.at(i, j))
        if (degrees[k] != degrees[i] + degrees[j])
          return {"bracket_grading", false,
                  "[g_" + std::to_string(degrees[i]) + ", g_" + std::to_string(degrees[j]) + "] has a component in g_" +
                      std::to_string(degrees[k])};
  return {"bracket_grading", true, ""};
}

}  // namespace

std::vector<GradationCheck> check_gradation(const MatrixLieAlgebra& alg, const StructureConstants& table,
                                            const std::vector<int>& degrees, const MarkedSet& delta1) {
  std::vector<GradationCheck> out;
  const std::size_t d = alg.dim();
  const int depth = *std::max_element(degrees.begin(), degrees.end());

  out.push_back(check_lie_bracket(table));
  out.push_back(check_bracket_grading(table, degrees));

  {
    GradationCheck c{"dimension_symmetry", true, ""};
    for (int k = 1; k <= depth; ++k) {
      auto pos = indices_with_degree(degrees, k).size();
      auto neg = indices_with_degree(degrees, -k).size();
      if (pos != neg) {
        c.passed = false;
        c.detail = "dim g_" + std::to_string(k) + " = " + std::to_string(pos) + " but dim g_-" + std::to_string(k) +
                   " = " + std::to_string(neg);
        break;
      }
    }
    out.push_back(c);
  }

  {
    GradationCheck c{"fundamental", true, ""};
    const auto minus_one = indices_with_degree(degrees, -1);
    for (int k = -2; k >= -depth && c.passed; --k) {
      const auto upper = indices_with_degree(degrees, k + 1);
      std::vector<Vector> gens;
      for (auto i : upper)
        for (auto j : minus_one) {
          Vector v = table.bracket_basis(i, j);
          if (!is_zero(v)) gens.push_back(std::move(v));
        }
      const auto target = indices_with_degree(degrees, k);
      Subspace spanned = Subspace::span(gens, d);
      if (!(spanned == Subspace::coordinate(d, target))) {
        c.passed = false;
        c.detail = "[g_" + std::to_string(k + 1) + ", g_-1] has dimension " + std::to_string(spanned.dim()) +
                   ", g_" + std::to_string(k) + " has dimension " + std::to_string(target.size());
      }
    }
    out.push_back(c);
  }

  {
    GradationCheck c{"depth", true, ""};
    const int from_roots = degree_of_root(alg.root_system().highest_root(), delta1);
    if (from_roots != depth) {
      c.passed = false;
      c.detail = "depth " + std::to_string(depth) + " but highest root gives " + std::to_string(from_roots);
    }
    for (int k = -depth; k <= depth && c.passed; ++k)
      if (indices_with_degree(degrees, k).empty()) {
        c.passed = false;
        c.detail = "g_" + std::to_string(k) + " vanishes inside the depth range";
      }
    out.push_back(c);
  }

  {
    GradationCheck c{"open_orbit", true, ""};
    const std::size_t n = alg.matrix_size();
    Matrix flat(d, n * n);
    std::size_t neg = 0, nonneg = 0;
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i) {
      (degrees[i] < 0 ? neg : nonneg)++;
      const auto& e = alg.basis()[i].matrix.entries();
      std::copy(e.begin(), e.end(), flat.row(row++).begin());
    }
    const std::size_t r = rank(flat);
    if (neg + nonneg != d || r != d) {
      c.passed = false;
      c.detail = "dim m + dim p = " + std::to_string(neg + nonneg) + ", rank of m + p = " + std::to_string(r) +
                 ", dim g = " + std::to_string(d);
    }
    out.push_back(c);
  }
  return out;
}

// ------------------------------------------------------- GradedLieAlgebra

std::vector<std::size_t> GradedLieAlgebra::basis_of_degree(int k) const {
  return indices_with_degree(degrees_, k);
}

std::map<int, std::size_t> GradedLieAlgebra::dims() const {
  std::map<int, std::size_t> out;
  for (int k = -depth_; k <= depth_; ++k) out[k] = dim_part(k);
  return out;
}

Subspace GradedLieAlgebra::part(int k) const {
  auto idx = basis_of_degree(k);
  return Subspace::coordinate(alg_->dim(), idx);
}

Subspace GradedLieAlgebra::filtration(int i) const {
  std::vector<std::size_t> idx;
  for (std::size_t b = 0; b < degrees_.size(); ++b)
    if (degrees_[b] >= i) idx.push_back(b);
  return Subspace::coordinate(alg_->dim(), idx);
}

Subspace GradedLieAlgebra::negative_part() const {
  std::vector<std::size_t> idx;
  for (std::size_t b = 0; b < degrees_.size(); ++b)
    if (degrees_[b] < 0) idx.push_back(b);
  return Subspace::coordinate(alg_->dim(), idx);
}

GradedLieAlgebra grade(std::shared_ptr<const MatrixLieAlgebra> alg, const MarkedSet& delta1) {
  delta1.validate(alg->rank());
  GradedLieAlgebra g;
  g.alg_ = std::move(alg);
  g.delta1_ = delta1;
  const auto& roots = g.alg_->root_system().roots();
  for (const auto& b : g.alg_->basis()) {
    if (b.tag.kind == BasisTag::Kind::Cartan)
      g.degrees_.push_back(0);
    else
      g.degrees_.push_back(degree_of_root(roots[b.tag.index], delta1));
  }
  g.depth_ = *std::max_element(g.degrees_.begin(), g.degrees_.end());
  g.checks_ = check_gradation(*g.alg_, g.alg_->structure_constants(), g.degrees_, delta1);
  for (const auto& c : g.checks_)
    if (!c.passed) throw InvariantViolation("gradation check '" + c.name + "' failed: " + c.detail);
  return g;
}

GradedLieAlgebra grade(const MatrixLieAlgebra& alg, const MarkedSet& delta1) {
  return grade(std::make_shared<const MatrixLieAlgebra>(alg), delta1);
}

bool bruhat_open_orbit_witness(const GradedLieAlgebra& g) {
  const auto& alg = g.algebra();
  const std::size_t n = alg.matrix_size();
  const Subspace m = g.negative_part();
  const Subspace p = g.parabolic();
  if (m.dim() + p.dim() != alg.dim()) return false;
  if (intersect(m, p).dim() != 0) return false;
  // Independent of the coordinate bookkeeping: the matrices themselves.
  Matrix flat(alg.dim(), n * n);
  std::size_t row = 0;
  for (const Subspace* s : {&m, &p})
    for (std::size_t i = 0; i < s->dim(); ++i) {
      const Matrix x = alg.element(s->basis_vector(i));
      std::copy(x.entries().begin(), x.entries().end(), flat.row(row++).begin());
    }
  return rank(flat) == alg.dim();
}

// --------------------------------------------------------------- diagrams

DegreeGrid degree_grid(const GradedLieAlgebra& g) {
  const auto& alg = g.algebra();
  if (alg.type() != LieType::A && alg.type() != LieType::C)
    throw InvalidInput(std::string("block diagrams are drawn for types A and C only, not ") + to_char(alg.type()));
  const std::size_t n = alg.matrix_size();
  DegreeGrid grid(n, std::vector<std::optional<int>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        grid[i][j] = 0;
        continue;
      }
      auto r = alg.root_system().find_lambda(alg.position_weight(i, j));
      if (r) grid[i][j] = degree_of_root(alg.root_system().roots()[*r], g.delta1());
    }
  return grid;
}

DegreeGrid block_grid(const DegreeGrid& grid) {
  DegreeGrid rows;
  for (const auto& r : grid)
    if (rows.empty() || rows.back() != r) rows.push_back(r);
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    bool same = !keep.empty();
    for (std::size_t i = 0; same && i < rows.size(); ++i) same = rows[i][j] == rows[i][keep.back()];
    if (!same) keep.push_back(j);
  }
  DegreeGrid out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto j : keep) out[i].push_back(rows[i][j]);
  return out;
}

std::string render_grid(const DegreeGrid& grid) {
  std::size_t width = 1;
  for (const auto& r : grid)
    for (const auto& c : r)
      if (c) width = std::max(width, std::to_string(*c).size());
  std::ostringstream os;
  for (const auto& r : grid) {
    std::string line;
    for (std::size_t j = 0; j < r.size(); ++j) {
      std::string cell = r[j] ? std::to_string(*r[j]) : "";
      if (j) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string render_block_diagram(const GradedLieAlgebra& g) { return render_grid(block_grid(degree_grid(g))); }

// ---------------------------------------------------------- SymbolAlgebra

SymbolAlgebra::SymbolAlgebra(std::vector<int> degrees, StructureConstants table)
    : degrees_(std::move(degrees)), table_(std::move(table)) {
  if (table_.dim() != degrees_.size()) throw InvalidInput("symbol algebra: table and degree list disagree");
  for (std::size_t a = 0; a < degrees_.size(); ++a) {
    if (degrees_[a] >= 0) throw InvalidInput("symbol algebra degrees must be negative");
    if (a > 0 && degrees_[a] > degrees_[a - 1]) throw InvalidInput("symbol algebra degrees must be nonincreasing");
  }
  depth_ = degrees_.empty() ? 0 : -degrees_.back();
  for (int d = -1; d >= -depth_; --d)
    if (block_dim(d) == 0) throw InvalidInput("symbol algebra has an empty degree inside its depth");
  if (!is_graded()) throw InvalidInput("symbol algebra bracket does not respect degrees");
}

std::size_t SymbolAlgebra::block_offset(int d) const {
  std::size_t a = 0;
  while (a < degrees_.size() && degrees_[a] > d) ++a;
  return a;
}

std::size_t SymbolAlgebra::block_dim(int d) const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), d));
}

std::optional<std::size_t> SymbolAlgebra::parent_index(std::size_t a) const {
  if (parent_.empty()) return std::nullopt;
  return parent_[a];
}

std::optional<std::size_t> SymbolAlgebra::index_of_parent(std::size_t parent) const {
  for (std::size_t a = 0; a < parent_.size(); ++a)
    if (parent_[a] == parent) return a;
  return std::nullopt;
}

bool SymbolAlgebra::is_graded() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      for (const auto& [c, v] : table_.at(a, b))
        if (degrees_[c] != degrees_[a] + degrees_[b]) return false;
  return true;
}

bool SymbolAlgebra::is_fundamental() const {
  const std::size_t off1 = block_offset(-1), n1 = block_dim(-1);
  for (int k = 2; k <= depth_; ++k) {
    std::vector<Vector> gens;
    const std::size_t off = block_offset(-k + 1), n = block_dim(-k + 1);
    for (std::size_t a = off; a < off + n; ++a)
      for (std::size_t b = off1; b < off1 + n1; ++b) gens.push_back(table_.bracket_basis(a, b));
    std::vector<std::size_t> axes;
    for (std::size_t c = block_offset(-k); c < block_offset(-k) + block_dim(-k); ++c) axes.push_back(c);
    if (!(Subspace::span(gens, dim()) == Subspace::coordinate(dim(), axes))) return false;
  }
  return true;
}

SymbolAlgebra symbol(const GradedLieAlgebra& g) {
  std::vector<std::size_t> parent;
  for (int k = -1; k >= -g.depth(); --k)
    for (auto i : g.basis_of_degree(k)) parent.push_back(i);
  std::vector<std::size_t> local(g.algebra().dim(), SIZE_MAX);
  for (std::size_t a = 0; a < parent.size(); ++a) local[parent[a]] = a;

  StructureConstants table(parent.size());
  std::vector<int> degrees;
  for (std::size_t a = 0; a < parent.size(); ++a) {
    degrees.push_back(g.degree_of(parent[a]));
    for (std::size_t b = 0; b < parent.size(); ++b)
      for (const auto& [k, c] : g.table().at(parent[a], parent[b])) {
        if (local[k] == SIZE_MAX) throw InvariantViolation("m is not closed under the bracket");
        table.set(a, b, local[k], c);
      }
  }
  SymbolAlgebra s(std::move(degrees), std::move(table));
  s.parent_ = std::move(parent);
  if (!s.is_fundamental()) throw InvariantViolation("m is not generated by g_-1");
  return s;
}

}  // namespace gradedlie
