#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "fernlab/matrix.hpp"

namespace fernlab::weyl {

// Permutation of {1..m} in one-line notation (images of 1,2,...,m).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t m);
  static Permutation longest(std::size_t m);  // i -> m+1-i
  static Permutation transposition(std::size_t m, int a, int b);

  std::size_t size() const { return img_.size(); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  // (a*b)(i) = a(b(i))
  Permutation operator*(const Permutation& b) const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::size_t length() const;  // inversion count
  bool is_identity() const;

  Matrix matrix() const { return permutation_matrix(img_); }

 private:
  std::vector<int> img_;
};

// All m! permutations in lexicographic one-line order. Throws SizeGuard for m > 9.
std::vector<Permutation> enumerate_weyl(std::size_t m);

// Right descent set D_R(u) = { i : u(i) > u(i+1) }, subset of {1..m-1}.
std::set<int> descent_right(const Permutation& u);

// Minimal-length representatives of the double cosets W_I \ W_m / W_J, in
// lexicographic order. I and J are subsets of {1..m-1}.
std::vector<Permutation> min_coset_reps(std::size_t m, const std::set<int>& I,
                                        const std::set<int>& J);

}  // namespace fernlab::weyl
