#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fernlab/blockshape.hpp"
#include "fernlab/lie.hpp"

namespace fernlab::dimcalc {

using weyl::BlockShape;
using weyl::Permutation;

struct Scenario {
  BlockShape shape;
  int d_l = 1;
  std::optional<Matrix> g;
};

struct DimEntry {
  std::int64_t value = 0;
  std::optional<std::int64_t> oracle;  // brute-force value when one exists
  std::string anchor;                  // formula or "oracle:" provenance string
};

using DimReport = std::map<std::string, DimEntry>;

// Closed-form dimensions of the parabolic and nilradical for a composition.
std::int64_t dim_parabolic(const BlockShape& shape);
std::int64_t dim_nilradical(const BlockShape& shape);

// Extension-group dimension formulas for the refinement u, with Lie-side
// oracles attached where the formula reduces to a subspace dimension.
DimReport ext_dims(const Scenario& scn, const Permutation& u);

// s(1+d_L) - |effective R_u^+| .
std::int64_t hom_u_dim(const Scenario& scn, const Permutation& u);

// |T_h| = a(t_prev - (r_s+h-1)/2), a = max(0, r_s - h).
std::int64_t t_count(std::int64_t t_prev, std::int64_t r_s, std::int64_t h);
// Double-loop enumeration of T_h, the independent oracle.
std::int64_t t_count_brute(std::int64_t t_prev, std::int64_t r_s, std::int64_t h);

// Envelope-backed kernel dimensions; requires an invertible non-critical g
// in the scenario (CriticalInput otherwise).
DimReport kernel_report(const Scenario& scn);

// Automorphic-side dimension formulas (pure evaluators).
DimReport rep_side_dims(const Scenario& scn);

}  // namespace fernlab::dimcalc
