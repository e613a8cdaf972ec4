#pragma once

#include <map>
#include <set>
#include <vector>

#include "fernlab/permutation.hpp"

namespace fernlab::weyl {

// Composition (r_1,...,r_s) of n together with the genericity pattern
// i0_prime, a subset of {1..s-1} marking consecutive block pairs in
// non-generic position.
struct BlockShape {
  int n = 0;
  std::vector<int> r;
  std::set<int> i0_prime;

  BlockShape() = default;
  BlockShape(std::vector<int> comp, std::set<int> i0p = {});

  std::size_t block_count() const { return r.size(); }
  // 1-based block index containing position x in 1..n.
  int block_of(int x) const;
  // Prefix sums t_0 = 0, t_i = r_1 + ... + r_i of the identity ordering.
  std::vector<int> cuts() const;
  std::set<int> s0() const;  // Delta \ {t_1..t_{s-1}}

  bool operator==(const BlockShape& o) const { return n == o.n && r == o.r && i0_prime == o.i0_prime; }
};

// Shape whose blocks are the connected runs of I inside {1..n-1}; inverse of s0().
BlockShape shape_from_subset(int n, const std::set<int>& I);

struct BlockData {
  std::vector<int> cuts;  // t_1^u .. t_s^u
  std::set<int> s0_u;     // Delta \ {t_1^u..t_{s-1}^u}
};

// t_i^u = sum_{j<=i} r_{u^{-1}(j)}.
BlockData block_data(const BlockShape& shape, const Permutation& u);

// The lift u# of u to W_n: the index block of original block b, kept in
// order, lands at the slot block b occupies in the ordering
// (u^{-1}(1),...,u^{-1}(s)); equivalently t_{b-1}+j -> t^u_{u(b)-1}+j.
Permutation block_lift(const BlockShape& shape, const Permutation& u);

// Composition reordered by u: (r_{u^{-1}(1)}, ..., r_{u^{-1}(s)}).
BlockShape permuted_shape(const BlockShape& shape, const Permutation& u);

struct CutEntry {
  Permutation u;
  int level = 0;              // l_i(u) with t^u_{level} = i
  std::set<int> prefix;      // I_{u,i} = {u^{-1}(1)..u^{-1}(level)}, original block labels
  std::set<int> complement;  // I^c_{u,i}
};

struct IndexReport {
  std::set<int> delta_prime;
  std::map<int, std::vector<CutEntry>> cut_sets;  // i in delta_prime -> I_i entries
};

IndexReport index_report(const BlockShape& shape);  // SizeGuard for s > 8

struct RPlus {
  std::vector<std::pair<int, int>> all;        // R_u^+
  std::vector<std::pair<int, int>> effective;  // pairs with u^{-1}(i) in i0_prime
};

// R_u^+ = {(i,j) : 1 <= i < j <= s, u^{-1}(j) = u^{-1}(i)+1}; the effective
// subset keeps the pairs whose consecutive original blocks are non-generic.
RPlus r_plus(const Permutation& u, const std::set<int>& i0_prime);

}  // namespace fernlab::weyl
