#pragma once

#include <vector>

#include "fernlab/matrix.hpp"

namespace fernlab {

enum class SpaceRelation { Equal, AInB, BInA, Incomparable };

// Subspace of Q^ambient_dim in canonical form: the basis matrix is the RREF
// of any spanning set, so two subspaces are equal iff their bases are
// identical matrices.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient_dim);
  static Subspace span_rows(const Matrix& rows);
  static Subspace full(std::size_t ambient_dim);
  // Span of unit coordinate vectors e_c for c in coords (0-based).
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& coords);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Subspace sum(const Subspace& o) const;
  // Zassenhaus: stack [A|A; B|0] in doubled ambient space, reduce, read the
  // rows supported on the right block.
  Subspace intersect(const Subspace& o) const;
  SpaceRelation compare(const Subspace& o) const;
  bool contains(const std::vector<Rational>& v) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

  // True when every basis row is a unit coordinate vector.
  bool is_coordinate() const;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fernlab
