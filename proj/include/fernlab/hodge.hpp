#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fernlab/blockshape.hpp"
#include "fernlab/subspace.hpp"

namespace fernlab::hodge {

using weyl::BlockShape;
using weyl::Permutation;

// Strictly decreasing integer weight tags h_1 > h_2 > ... > h_n.
struct Weights {
  std::vector<std::int64_t> h;
  Weights() = default;
  explicit Weights(std::vector<std::int64_t> values);
  static Weights standard(int n);  // (n-1, n-2, ..., 0)
  std::size_t size() const { return h.size(); }
};

// Complete flag F^(1) c F^(2) c ... c F^(n) with dim F^(k) = k.
struct HodgeFlag {
  int n = 0;
  Weights weights;
  std::vector<Subspace> steps;  // steps[k-1] = F^(k)

  const Subspace& step(int k) const { return steps[static_cast<std::size_t>(k) - 1]; }
};

// F^(k) = span of the first k columns of g, so the flag depends only on the
// coset gB (column operations within prefixes).
HodgeFlag flag_from_matrix(const Matrix& g, const Weights& w);

// Builds a flag from explicit step generators: F^(k) = span(gens[0..k-1]).
HodgeFlag flag_from_generators(const std::vector<std::vector<Rational>>& gens, const Weights& w);

// Relative position of the refinement flag of u — step l is the span of the
// original blocks u^{-1}(1), ..., u^{-1}(l) — against the complete flag,
// reported as the maximal-length representative of its W_{S_0^u}-coset.
Permutation relative_position(const BlockShape& shape, const Permutation& u,
                              const HodgeFlag& flag);

// True iff the relative position is the longest element for every u in W_s.
bool is_noncritical(const BlockShape& shape, const HodgeFlag& flag);

// Lines L_l = F^(n-l+1) ∩ <e_1..e_l>, each normalized so the e_l-coordinate
// is 1. Throws CriticalPosition when an intersection is not a line or its
// e_l-coordinate vanishes.
struct LineDecomposition {
  int n = 0;
  std::vector<std::vector<Rational>> gens;  // gens[l-1] spans L_l
};

LineDecomposition extract_lines(const HodgeFlag& flag);

struct FlatLine {
  int i = 0;
  std::vector<std::size_t> kept_coords;  // 0-based coordinates of D_(i)
  std::vector<Rational> line;            // L_i with the deleted coordinates zeroed
  bool collapsed = false;                // true when the deletion kills the line
};

// Coordinate deletion of L_i onto D_(i); i must lie in Delta'(shape).
FlatLine flatten_line(const LineDecomposition& lines, int i, const BlockShape& shape);

// Exterior-power vector with exact coordinates over sorted index subsets.
struct WedgeVector {
  int n = 0;
  int degree = 0;
  std::map<std::vector<int>, Rational> coords;  // 1-based sorted subsets -> coefficient
};

// Generator of the line Λ^{n-i} F^(n-i); 1 <= i <= n-1.
WedgeVector fil_max_wedge(const HodgeFlag& flag, int i);
Rational coefficient(const WedgeVector& w, const std::vector<int>& subset);
// Zeroes every coordinate that is not e_{I^c_{u,i}} for some u in I_i.
WedgeVector pr_flat(const WedgeVector& w, const BlockShape& shape, int i);
WedgeVector wedge_with_vector(const WedgeVector& w, const std::vector<Rational>& v);

struct GL4Params {
  Rational L12, L13, L14, L23, L34;
};

// The 4-step flag determined by the parameters: F^(1) = <e4+L34 e3+e2+L14 e1>,
// then adding e3+L23 e2+L13 e1, then e2+L12 e1.
HodgeFlag gl4_flag(const GL4Params& p, const Weights& w);

// Rewrites the gl4 flag in the permuted basis (e3,e4,e1,e2) and compares the
// extracted lines coefficient-for-coefficient with their closed forms.
// Requires L23*L12 - L13 != 0 and L13 - L14*L23 != 0 (DegenerateDenominator).
bool gl4_rebased_check(const GL4Params& p);

}  // namespace fernlab::hodge
