#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fernlab/permutation.hpp"

namespace fernlab::steinberg {

using weyl::Permutation;

// Chain of k cuspidal twists of block size r inside GL_{k*r}.
struct Segment {
  int k = 0;
  int r = 1;
  Segment() = default;
  Segment(int k_, int r_);
  int m() const { return k * r; }
};

// Label J of a generalized Steinberg constituent: a subset of {1..k-1}.
using FactorLabel = std::set<int>;

struct Interval {
  FactorLabel lower, upper;
  std::vector<FactorLabel> members;  // all J with lower∩upper ⊆ J ⊆ lower∪upper
};

// socle label Delta_k \ D_R(u), cosocle label D_R(u).
std::pair<FactorLabel, FactorLabel> socle_cosocle(const Segment& seg, const Permutation& u);

// All u with Delta_k \ D_R(u) = J. SizeGuard for k > 8.
std::vector<Permutation> jacquet_fiber(const Segment& seg, const FactorLabel& J);

// Canonical u with D_R(u) = J: positions joined through J form maximal
// intervals, each filled with the next values in decreasing order.
Permutation realize_descent(int k, const FactorLabel& J);

Interval q_interval(const FactorLabel& j0, const FactorLabel& j1);

// d_L * (2^s - 2), the number of generic constituents over all embeddings.
std::int64_t generic_constituent_count(int s, int d_l);

// Validation hook for externally supplied pairs (I^+, I^-): both must be
// subsets of Delta_k, disjoint, and their interval must enumerate cleanly.
Interval validate_pm_pair(int k, const FactorLabel& iplus, const FactorLabel& iminus);

// Hasse diagram of the interval as a DOT digraph (edges = covering relations).
std::string interval_dot(const Interval& iv);

}  // namespace fernlab::steinberg
