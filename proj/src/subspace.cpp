#include "fernlab/subspace.hpp"

#include <algorithm>

#include "fernlab/errors.hpp"

namespace fernlab {

namespace {

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
}

// Reduce v against an RREF basis in place; afterwards v == 0 iff it lay in the span.
void reduce_against(std::vector<Rational>& v, const Matrix& basis,
                    const std::vector<std::size_t>& pivots) {
  Rational scratch;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t p = pivots[r];
    if (v[p].is_zero()) continue;
    Rational f = v[p];
    for (std::size_t j = p; j < v.size(); ++j) {
      if (basis.at(r, j).is_zero()) continue;
      v[j].submul(f, basis.at(r, j), scratch);
    }
  }
}

// Intersection of `other` with the coordinate subspace on `coords`: reorder
// columns so the complement comes first, reduce, and keep the rows whose
// pivots fall inside the coords block.
Subspace intersect_coordinate(const std::vector<std::size_t>& coords, const Subspace& other) {
  const std::size_t n = other.ambient_dim();
  std::vector<bool> in_s(n, false);
  for (auto c : coords) in_s[c] = true;
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!in_s[j]) order.push_back(j);
  const std::size_t split = order.size();
  for (std::size_t j = 0; j < n; ++j)
    if (in_s[j]) order.push_back(j);

  Matrix reordered(other.dim(), n);
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) reordered.at(i, j) = other.basis().at(i, order[j]);
  auto [red, pivots] = rref(reordered);

  std::vector<std::vector<Rational>> hits;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < split) continue;
    std::vector<Rational> v(n);
    for (std::size_t j = split; j < n; ++j) v[order[j]] = red.at(i, j);
    hits.push_back(std::move(v));
  }
  return Subspace::span(hits, n);
}

Subspace intersect_zassenhaus(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  Matrix stacked(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      stacked.at(i, j) = a.basis().at(i, j);
      stacked.at(i, n + j) = a.basis().at(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  auto [red, pivots] = rref(stacked);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    std::vector<Rational> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = red.at(i, n + j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, n);
}

}  // namespace

Subspace Subspace::span(const std::vector<std::vector<Rational>>& vectors,
                        std::size_t ambient_dim) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      fail(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
  return span_rows(m);
}

Subspace Subspace::span_rows(const Matrix& rows) {
  Subspace s(rows.cols());
  auto [red, pivots] = rref(rows);
  s.basis_ = std::move(red);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return span_rows(Matrix::identity(ambient_dim));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subspace s(ambient_dim);
  Matrix m(sorted.size(), ambient_dim);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= ambient_dim) fail(ErrorKind::BadSubset, "coordinate out of range");
    m.at(i, sorted[i]) = Rational(1);
  }
  s.basis_ = std::move(m);
  s.pivots_ = sorted;
  return s;
}

Subspace Subspace::sum(const Subspace& o) const {
  check_ambient(*this, o);
  Matrix stacked(dim() + o.dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = o.basis_.at(i, j);
  return span_rows(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_ambient(*this, o);
  if (is_coordinate()) return intersect_coordinate(pivots_, o);
  if (o.is_coordinate()) return intersect_coordinate(o.pivots_, *this);
  return intersect_zassenhaus(*this, o);
}

SpaceRelation Subspace::compare(const Subspace& o) const {
  check_ambient(*this, o);
  if (basis_ == o.basis_) return SpaceRelation::Equal;
  auto contained = [](const Subspace& x, const Subspace& y) {
    if (x.dim() > y.dim()) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (!y.contains(x.basis_.row(i))) return false;
    return true;
  };
  const bool ab = contained(*this, o);
  const bool ba = contained(o, *this);
  if (ab && ba) return SpaceRelation::Equal;
  if (ab) return SpaceRelation::AInB;
  if (ba) return SpaceRelation::BInA;
  return SpaceRelation::Incomparable;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient");
  std::vector<Rational> w = v;
  reduce_against(w, basis_, pivots_);
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::is_coordinate() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j).is_zero()) continue;
      if (!basis_.at(i, j).is_one()) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

}  // namespace fernlab
