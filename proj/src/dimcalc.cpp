#include "fernlab/dimcalc.hpp"

#include <algorithm>

#include "fernlab/errors.hpp"
#include "fernlab/hodge.hpp"

namespace fernlab::dimcalc {

namespace {

std::int64_t sum_squares(const BlockShape& shape) {
  std::int64_t acc = 0;
  for (int r : shape.r) acc += static_cast<std::int64_t>(r) * r;
  return acc;
}

}  // namespace

std::int64_t dim_parabolic(const BlockShape& shape) {
  const std::int64_t n = shape.n;
  return (n * n + sum_squares(shape)) / 2;
}

std::int64_t dim_nilradical(const BlockShape& shape) {
  const std::int64_t n = shape.n;
  return (n * n - sum_squares(shape)) / 2;
}

DimReport ext_dims(const Scenario& scn, const Permutation& u) {
  const std::int64_t n = scn.shape.n;
  const std::int64_t d = scn.d_l;
  const std::int64_t s = static_cast<std::int64_t>(scn.shape.block_count());
  const std::int64_t i0p = static_cast<std::int64_t>(scn.shape.i0_prime.size());
  BlockShape shape_u = weyl::permuted_shape(scn.shape, u);
  const int ni = scn.shape.n;

  auto sub_dim = [&](lie::SubalgebraKind kind, const BlockShape& sh) {
    return static_cast<std::int64_t>(lie::standard_subalgebra(ni, kind, sh).dim());
  };

  DimReport rep;
  rep["ext1_full"] = {1 + d * n * n, std::nullopt, "1 + dL*n^2"};
  rep["ext1_u"] = {1 + d * dim_parabolic(shape_u),
                   1 + d * sub_dim(lie::SubalgebraKind::Parabolic, shape_u),
                   "1 + dL*dim p(S0^u); oracle: parabolic subspace dimension"};
  rep["ext1_circ_u"] = {1 + d * (dim_nilradical(shape_u) + s),
                        1 + d * sub_dim(lie::SubalgebraKind::Tau, shape_u),
                        "1 + dL*(dim n(S0^u) + s); oracle: tau subspace dimension"};
  rep["ext1_zero_u"] = {
      1 + d * (n * (n - 1) / 2 + s),
      1 + d * (sub_dim(lie::SubalgebraKind::Nilradical,
                       BlockShape(std::vector<int>(static_cast<std::size_t>(ni), 1))) +
               s),
      "1 + dL*(n(n-1)/2 + s); oracle: strict upper triangle dimension"};
  rep["ext1_g"] = {1 + d * (n * (n - 1) / 2) + i0p, std::nullopt, "1 + dL*n(n-1)/2 + |I0'|"};
  rep["ext1_circ_g"] = {1 + d * dim_nilradical(scn.shape) + i0p,
                        1 + d * sub_dim(lie::SubalgebraKind::Nilradical, scn.shape) + i0p,
                        "1 + dL*dim n(S0) + |I0'|; oracle: nilradical subspace dimension"};
  rep["im_nu"] = {d * (n * (n + 1) / 2) - i0p,
                  d * static_cast<std::int64_t>(
                          lie::standard_subalgebra(ni, lie::SubalgebraKind::Borel).dim()) -
                      i0p,
                  "dL*n(n+1)/2 - |I0'|; oracle: Borel subspace dimension"};
  rep["im_nu_sigma"] = {n * (n + 1) / 2 - i0p, std::nullopt, "n(n+1)/2 - |I0'|"};
  rep["ext1_sigma"] = {1 + n * n + (d - 1) * (n * (n - 1) / 2), std::nullopt,
                       "1 + n^2 + (dL-1)*n(n-1)/2"};
  return rep;
}

std::int64_t hom_u_dim(const Scenario& scn, const Permutation& u) {
  const std::int64_t s = static_cast<std::int64_t>(scn.shape.block_count());
  auto rp = weyl::r_plus(u, scn.shape.i0_prime);
  return s * (1 + scn.d_l) - static_cast<std::int64_t>(rp.effective.size());
}

std::int64_t t_count(std::int64_t t_prev, std::int64_t r_s, std::int64_t h) {
  if (t_prev < 1 || r_s < 1) fail(ErrorKind::Validation, "need t_prev >= 1 and r_s >= 1");
  const std::int64_t a = std::max<std::int64_t>(0, r_s - h);
  const std::int64_t twice = a * (2 * t_prev - r_s - h + 1);
  return twice / 2;
}

std::int64_t t_count_brute(std::int64_t t_prev, std::int64_t r_s, std::int64_t h) {
  std::int64_t count = 0;
  for (std::int64_t j = 1; j <= t_prev - h; ++j)
    for (std::int64_t i = j + h; i <= std::min(t_prev, j + r_s - 1); ++i)
      if (1 <= j + h) ++count;
  return count;
}

DimReport kernel_report(const Scenario& scn) {
  if (!scn.g) fail(ErrorKind::CriticalInput, "kernel report needs a flag matrix g");
  if (!scn.g->is_invertible()) fail(ErrorKind::Singular, "g is singular");
  hodge::HodgeFlag flag = hodge::flag_from_matrix(*scn.g, hodge::Weights::standard(scn.shape.n));
  if (!hodge::is_noncritical(scn.shape, flag))
    fail(ErrorKind::CriticalInput, "g is critical for this shape");

  const std::int64_t s = static_cast<std::int64_t>(scn.shape.block_count());
  const std::int64_t i0p = static_cast<std::int64_t>(scn.shape.i0_prime.size());
  const std::int64_t d_env =
      static_cast<std::int64_t>(lie::envelope(*scn.g, scn.shape, lie::EnvelopeKind::Circ).dim());

  DimReport rep;
  rep["envelope_circ"] = {d_env, d_env, "oracle: dim of the computed envelope"};
  rep["ker_dim"] = {(std::int64_t{1} << s) - 1 - d_env, std::nullopt, "2^s - 1 - dim envelope"};
  rep["im_nu_circ"] = {scn.d_l * d_env - i0p, std::nullopt, "dL*dim envelope - |I0'|"};
  return rep;
}

DimReport rep_side_dims(const Scenario& scn) {
  const std::int64_t n = scn.shape.n;
  const std::int64_t d = scn.d_l;
  const std::int64_t s = static_cast<std::int64_t>(scn.shape.block_count());
  const std::int64_t rs = scn.shape.r.back();

  DimReport rep;
  rep["lalg_line"] = {s + d, std::nullopt, "s + dL"};
  rep["lalg_line_sigma"] = {s + 1, std::nullopt, "s + 1"};
  rep["ext_pi1"] = {s + ((std::int64_t{1} << s) - 1) * d, std::nullopt, "s + (2^s - 1)*dL"};
  rep["ext_iota"] = {1 + ((n - rs) * (n - 2 * rs) + (rs * rs - rs) / 2) * d, std::nullopt,
                     "1 + ((n-r_s)(n-2r_s) + (r_s^2-r_s)/2)*dL"};
  return rep;
}

}  // namespace fernlab::dimcalc
