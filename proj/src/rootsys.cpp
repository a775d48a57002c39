#include "gradedlie/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gradedlie/error.hpp"
#include "gradedlie/exactlin.hpp"

namespace gradedlie {

char to_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieType parse_lie_type(const std::string& s) {
  if (s == "A" || s == "a") return LieType::A;
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  throw InvalidInput("unknown Lie type '" + s + "' (expected A, B, C or D)");
}

int min_rank(LieType t) {
  switch (t) {
    case LieType::A: return 1;
    case LieType::B:
    case LieType::C: return 2;
    case LieType::D: return 3;
  }
  return 1;
}

// ------------------------------------------------------------------ Root

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::positive() const {
  return std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.lambda) x = -x;
  for (auto& x : r.coeffs) x = -x;
  return r;
}

// ------------------------------------------------------------- MarkedSet

MarkedSet::MarkedSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (indices_.empty()) throw InvalidInput("marked set must be nonempty");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw InvalidInput("marked set has a repeated index");
  if (indices_.front() < 1) throw InvalidInput("marked set indices are 1-based");
}

MarkedSet MarkedSet::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw InvalidInput("empty entry in marked set '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("marked set entry '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw InvalidInput("marked set entry '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return MarkedSet(std::move(out));
}

bool MarkedSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::string MarkedSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices_[i]);
  }
  return s;
}

void MarkedSet::validate(int rank) const {
  if (indices_.empty()) throw InvalidInput("marked set must be nonempty");
  if (indices_.back() > rank)
    throw InvalidInput("marked index " + std::to_string(indices_.back()) + " exceeds rank " +
                       std::to_string(rank));
}

std::vector<MarkedSet> all_marked_sets(int rank) {
  std::vector<MarkedSet> out;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    out.emplace_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ RootSystem

namespace {

std::vector<int> unit(int dim, int i) {
  std::vector<int> v(dim, 0);
  v[i] = 1;
  return v;
}

std::vector<int> combine(const std::vector<int>& a, int sa, const std::vector<int>& b, int sb) {
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = sa * a[i] + sb * b[i];
  return v;
}

/// Expresses λ-vectors over the simple roots by exact elimination.
std::vector<int> expand(const std::vector<std::vector<int>>& simple, const std::vector<int>& lambda) {
  const std::size_t rows = lambda.size();
  Matrix a(rows, simple.size());
  for (std::size_t j = 0; j < simple.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = simple[j][i];
  Vector b(rows);
  for (std::size_t i = 0; i < rows; ++i) b[i] = lambda[i];
  auto x = solve(a, b);
  if (!x) throw InvariantViolation("root is not in the span of the simple roots");
  std::vector<int> out;
  for (const auto& q : *x) {
    if (q.get_den() != 1) throw InvariantViolation("non-integral simple-root expansion");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
  if (rank < min_rank(type))
    throw InvalidInput(std::string("rank ") + std::to_string(rank) + " is below the minimum " +
                       std::to_string(min_rank(type)) + " for type " + to_char(type));
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  const int l = rank;
  const int d = type == LieType::A ? l + 1 : l;
  rs.lambda_dim_ = d;

  for (int i = 0; i + 1 < l; ++i) rs.simple_.push_back(combine(unit(d, i), 1, unit(d, i + 1), -1));
  switch (type) {
    case LieType::A: rs.simple_.push_back(combine(unit(d, l - 1), 1, unit(d, l), -1)); break;
    case LieType::B: rs.simple_.push_back(unit(d, l - 1)); break;
    case LieType::C: rs.simple_.push_back(combine(unit(d, l - 1), 2, unit(d, l - 1), 0)); break;
    case LieType::D: rs.simple_.push_back(combine(unit(d, l - 2), 1, unit(d, l - 1), 1)); break;
  }

  std::vector<std::vector<int>> pos;
  if (type == LieType::A) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) pos.push_back(combine(unit(d, i), 1, unit(d, j), -1));
  } else {
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) {
        pos.push_back(combine(unit(d, i), 1, unit(d, j), -1));
        pos.push_back(combine(unit(d, i), 1, unit(d, j), 1));
      }
    if (type == LieType::B)
      for (int i = 0; i < l; ++i) pos.push_back(unit(d, i));
    if (type == LieType::C)
      for (int i = 0; i < l; ++i) pos.push_back(combine(unit(d, i), 2, unit(d, i), 0));
  }

  for (auto& lam : pos) {
    Root r{lam, expand(rs.simple_, lam)};
    if (std::any_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c < 0; }))
      throw InvariantViolation("positive root with a negative simple coefficient");
    rs.positive_.push_back(std::move(r));
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs > b.coeffs;
  });
  rs.all_ = rs.positive_;
  for (const auto& r : rs.positive_) rs.all_.push_back(-r);
  return rs;
}

std::optional<std::size_t> RootSystem::find_lambda(const std::vector<int>& lambda) const {
  for (std::size_t i = 0; i < all_.size(); ++i)
    if (all_[i].lambda == lambda) return i;
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::find_coeffs(const std::vector<int>& coeffs) const {
  for (std::size_t i = 0; i < all_.size(); ++i)
    if (all_[i].coeffs == coeffs) return i;
  return std::nullopt;
}

std::vector<int> RootSystem::lambda_of(const std::vector<int>& coeffs) const {
  std::vector<int> v(lambda_dim_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < lambda_dim_; ++k) v[k] += coeffs[i] * simple_[i][k];
  return v;
}

int degree_of_root(const Root& root, const MarkedSet& delta1) {
  int deg = 0;
  for (int i : delta1.indices()) deg += root.coeffs.at(i - 1);
  return deg;
}

int degree_of_root(const RootSystem& rs, const std::vector<int>& lambda, const MarkedSet& delta1) {
  auto idx = rs.find_lambda(lambda);
  if (!idx) throw InvalidInput("vector is not a root of this system");
  delta1.validate(rs.rank());
  return degree_of_root(rs.roots()[*idx], delta1);
}

std::vector<int> apply_diagram_automorphism(LieType type, int rank, const std::vector<int>& coeffs) {
  std::vector<int> out = coeffs;
  if (type == LieType::A) {
    std::reverse(out.begin(), out.end());
  } else if (type == LieType::D) {
    std::swap(out[rank - 2], out[rank - 1]);
  }
  return out;
}

MarkedSet diagram_automorphism_orbit(LieType type, int rank, const MarkedSet& delta1) {
  delta1.validate(rank);
  std::vector<int> image;
  for (int i : delta1.indices()) {
    int j = i;
    if (type == LieType::A) j = rank + 1 - i;
    if (type == LieType::D && i >= rank - 1) j = (i == rank) ? rank - 1 : rank;
    image.push_back(j);
  }
  MarkedSet other(std::move(image));
  return std::min(delta1, other);
}

}  // namespace gradedlie
