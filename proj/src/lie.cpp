#include "fernlab/lie.hpp"

#include "fernlab/errors.hpp"

namespace fernlab::lie {

namespace {

std::size_t idx(int n, int i, int j) {  // 0-based
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

template <typename Pred>
std::vector<std::size_t> block_positions(const BlockShape& shape, Pred take) {
  std::vector<std::size_t> coords;
  const int n = shape.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (take(shape.block_of(i), shape.block_of(j))) coords.push_back(idx(n, i - 1, j - 1));
  return coords;
}

LieSubspace from_coords(int n, const std::vector<std::size_t>& coords) {
  return LieSubspace(n, Subspace::coordinate(static_cast<std::size_t>(n) * n, coords));
}

LieSubspace levi_center(const BlockShape& shape) {
  const int n = shape.n;
  std::vector<std::vector<Rational>> rows;
  int start = 0;
  for (std::size_t b = 0; b < shape.block_count(); ++b) {
    std::vector<Rational> v(static_cast<std::size_t>(n) * n);
    for (int t = start; t < start + shape.r[b]; ++t) v[idx(n, t, t)] = Rational(1);
    rows.push_back(std::move(v));
    start += shape.r[b];
  }
  return LieSubspace(n, Subspace::span(rows, static_cast<std::size_t>(n) * n));
}

LieSubspace levi_traceless(const BlockShape& shape) {
  const int n = shape.n;
  std::vector<std::vector<Rational>> rows;
  int start = 0;
  for (std::size_t b = 0; b < shape.block_count(); ++b) {
    const int r = shape.r[b];
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q) {
        if (p == q) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n) * n);
        v[idx(n, start + p, start + q)] = Rational(1);
        rows.push_back(std::move(v));
      }
    for (int p = 0; p + 1 < r; ++p) {
      std::vector<Rational> v(static_cast<std::size_t>(n) * n);
      v[idx(n, start + p, start + p)] = Rational(1);
      v[idx(n, start + p + 1, start + p + 1)] = Rational(-1);
      rows.push_back(std::move(v));
    }
    start += r;
  }
  return LieSubspace(n, Subspace::span(rows, static_cast<std::size_t>(n) * n));
}

}  // namespace

std::vector<Rational> flatten(const Matrix& x) {
  std::vector<Rational> v(x.rows() * x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) v[i * x.cols() + j] = x.at(i, j);
  return v;
}

Matrix unflatten(const std::vector<Rational>& v, int n) {
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[idx(n, i, j)];
  return m;
}

bool LieSubspace::contains(const Matrix& x) const { return space.contains(flatten(x)); }

LieSubspace standard_subalgebra(int n, SubalgebraKind kind) {
  BlockShape ones(std::vector<int>(static_cast<std::size_t>(n), 1));
  return standard_subalgebra(n, kind, ones);
}

LieSubspace standard_subalgebra(int n, SubalgebraKind kind, const BlockShape& shape) {
  if (shape.n != n) fail(ErrorKind::DimensionMismatch, "shape total differs from n");
  switch (kind) {
    case SubalgebraKind::Borel: {
      std::vector<std::size_t> coords;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) coords.push_back(idx(n, i, j));
      return from_coords(n, coords);
    }
    case SubalgebraKind::OppositeBorel: {
      std::vector<std::size_t> coords;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) coords.push_back(idx(n, i, j));
      return from_coords(n, coords);
    }
    case SubalgebraKind::Parabolic:
      return from_coords(n, block_positions(shape, [](int a, int b) { return a <= b; }));
    case SubalgebraKind::Levi:
      return from_coords(n, block_positions(shape, [](int a, int b) { return a == b; }));
    case SubalgebraKind::Nilradical:
      return from_coords(n, block_positions(shape, [](int a, int b) { return a < b; }));
    case SubalgebraKind::LeviCenter:
      return levi_center(shape);
    case SubalgebraKind::LeviTraceless:
      return levi_traceless(shape);
    case SubalgebraKind::ParabolicTraceless: {
      auto l0 = levi_traceless(shape);
      auto nil = standard_subalgebra(n, SubalgebraKind::Nilradical, shape);
      return LieSubspace(n, l0.space.sum(nil.space));
    }
    case SubalgebraKind::Tau: {
      auto z = levi_center(shape);
      auto nil = standard_subalgebra(n, SubalgebraKind::Nilradical, shape);
      return LieSubspace(n, z.space.sum(nil.space));
    }
  }
  fail(ErrorKind::Validation, "unknown subalgebra kind");
}

LieSubspace ad_conj(const Matrix& g, const LieSubspace& v) {
  if (g.rows() != static_cast<std::size_t>(v.n) || g.cols() != g.rows())
    fail(ErrorKind::DimensionMismatch, "conjugator shape");
  Matrix ginv = g.inverse();  // throws Singular
  std::vector<std::vector<Rational>> rows;
  rows.reserve(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    Matrix x = unflatten(v.space.basis().row(k), v.n);
    rows.push_back(flatten(g * x * ginv));
  }
  return LieSubspace(v.n, Subspace::span(rows, static_cast<std::size_t>(v.n) * v.n));
}

LieSubspace ad_permute(const Permutation& w, const LieSubspace& v) {
  if (w.size() != static_cast<std::size_t>(v.n))
    fail(ErrorKind::DimensionMismatch, "permutation letters differ from n");
  const int n = v.n;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    std::vector<Rational> src = v.space.basis().row(k);
    std::vector<Rational> dst(src.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (src[idx(n, i, j)].is_zero()) continue;
        dst[idx(n, w(i + 1) - 1, w(j + 1) - 1)] = src[idx(n, i, j)];
      }
    rows.push_back(std::move(dst));
  }
  return LieSubspace(n, Subspace::span(rows, static_cast<std::size_t>(n) * n));
}

// Stabilizer-side summand of the refinement u: the standard subalgebra of
// the permuted shape, carried onto the block-union flag by the inverse lift.
LieSubspace refinement_subalgebra(const BlockShape& shape, const Permutation& u,
                                  SubalgebraKind kind) {
  BlockShape shape_u = weyl::permuted_shape(shape, u);
  LieSubspace standard = standard_subalgebra(shape.n, kind, shape_u);
  return ad_permute(weyl::block_lift(shape, u).inverse(), standard);
}

LieSubspace envelope(const Matrix& g, const BlockShape& shape, EnvelopeKind kind) {
  if (shape.block_count() > 8) fail(ErrorKind::SizeGuard, "envelope limited to s <= 8");
  const int n = shape.n;
  LieSubspace adgb = ad_conj(g, standard_subalgebra(n, SubalgebraKind::Borel));
  const SubalgebraKind base =
      kind == EnvelopeKind::Circ ? SubalgebraKind::Tau : SubalgebraKind::Parabolic;
  LieSubspace acc(n, Subspace(static_cast<std::size_t>(n) * n));
  for (const auto& u : weyl::enumerate_weyl(shape.block_count())) {
    LieSubspace moved = refinement_subalgebra(shape, u, base);
    Subspace summand = moved.space.intersect(adgb.space);
    acc.space = acc.space.sum(summand);
    if (kind == EnvelopeKind::Full && acc.dim() == adgb.dim()) break;
  }
  return acc;
}

std::vector<SummandDims> summand_dims(const Matrix& g, const BlockShape& shape) {
  if (shape.block_count() > 8) fail(ErrorKind::SizeGuard, "summand report limited to s <= 8");
  const int n = shape.n;
  LieSubspace adgb = ad_conj(g, standard_subalgebra(n, SubalgebraKind::Borel));
  std::vector<SummandDims> out;
  for (const auto& u : weyl::enumerate_weyl(shape.block_count())) {
    SummandDims row;
    row.u = u;
    row.tau_dim =
        refinement_subalgebra(shape, u, SubalgebraKind::Tau).space.intersect(adgb.space).dim();
    row.p_dim = refinement_subalgebra(shape, u, SubalgebraKind::Parabolic)
                    .space.intersect(adgb.space)
                    .dim();
    out.push_back(std::move(row));
  }
  return out;
}

FernWitness fern_witness(int i, int j, const Matrix& b, const BlockShape& shape) {
  const int n = shape.n;
  if (!(1 <= j && j < i && i <= n)) fail(ErrorKind::Validation, "need 1 <= j < i <= n");
  if (b.rows() != static_cast<std::size_t>(n) || b.cols() != b.rows())
    fail(ErrorKind::DimensionMismatch, "b shape");
  if (!b.is_upper_triangular() || !b.is_invertible())
    fail(ErrorKind::NoWitness, "mixed basis degenerates unless b is invertible upper-triangular");
  Matrix binv = b.inverse();

  // Mixed basis as columns; column j stays e_j.
  Matrix mixed(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    for (int t = 1; t <= n; ++t) {
      if (l == j || l > i)
        mixed.at(t - 1, l - 1) = Rational(t == l ? 1 : 0);
      else
        mixed.at(t - 1, l - 1) = binv.at(t - 1, l - 1);
    }
  }
  if (!mixed.is_invertible()) fail(ErrorKind::NoWitness, "mixed set is not a basis");

  // pi kills every mixed basis vector except the e_j slot, which maps to e_i;
  // in the standard basis that is e_i times row j of mixed^{-1}.
  Matrix mixinv = mixed.inverse();
  Matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) a.at(i - 1, t - 1) = mixinv.at(j - 1, t - 1);

  FernWitness w;
  w.i = i;
  w.j = j;
  const int bi = shape.block_of(i), bj = shape.block_of(j);
  w.u = Permutation::transposition(shape.block_count(), bj, bi);
  for (int l = j + 1; l <= i; ++l) w.x.push_back(a.at(i - 1, l - 1));
  w.witness = a;

  // a stabilizes the block filtration with coordinates i and j exchanged, so
  // it lies in the conjugate of p_{S0} by b^{-1} times that transposition.
  Matrix conj = binv * Permutation::transposition(static_cast<std::size_t>(n), j, i).matrix();
  LieSubspace target = ad_conj(conj, standard_subalgebra(n, SubalgebraKind::Parabolic, shape));
  w.member = target.contains(a);
  return w;
}

FernCheck fern_check(const Matrix& b, const BlockShape& shape) {
  const int n = shape.n;
  FernCheck out;
  out.all_members = true;
  std::vector<std::vector<Rational>> rows;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      auto w = fern_witness(i, j, b, shape);
      out.all_members = out.all_members && w.member;
      rows.push_back(flatten(w.witness));
      out.witnesses.push_back(std::move(w));
    }
  Subspace witness_span = Subspace::span(rows, static_cast<std::size_t>(n) * n);
  LieSubspace lower = standard_subalgebra(n, SubalgebraKind::OppositeBorel);
  LieSubspace upper_part =
      ad_conj(b.inverse(), standard_subalgebra(n, SubalgebraKind::Borel));
  Subspace total = witness_span.sum(upper_part.space.intersect(lower.space));
  out.spans = (total == lower.space);
  return out;
}

}  // namespace fernlab::lie
