#include "fernlab/hodge.hpp"

#include <algorithm>
#include <functional>

#include "fernlab/errors.hpp"

namespace fernlab::hodge {

Weights::Weights(std::vector<std::int64_t> values) : h(std::move(values)) {
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (h[i] <= h[i + 1]) fail(ErrorKind::Validation, "weights must be strictly decreasing");
}

Weights Weights::standard(int n) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
  return Weights(std::move(v));
}

HodgeFlag flag_from_matrix(const Matrix& g, const Weights& w) {
  const std::size_t n = g.rows();
  if (g.cols() != n) fail(ErrorKind::DimensionMismatch, "flag matrix must be square");
  if (w.size() != n) fail(ErrorKind::DimensionMismatch, "weights length differs from n");
  if (!g.is_invertible()) fail(ErrorKind::Singular, "flag matrix is singular");
  HodgeFlag f;
  f.n = static_cast<int>(n);
  f.weights = w;
  std::vector<std::vector<Rational>> cols;
  for (std::size_t k = 0; k < n; ++k) {
    cols.push_back(g.col(k));
    f.steps.push_back(Subspace::span(cols, n));
  }
  return f;
}

HodgeFlag flag_from_generators(const std::vector<std::vector<Rational>>& gens, const Weights& w) {
  const std::size_t n = gens.size();
  Matrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (gens[k].size() != n) fail(ErrorKind::DimensionMismatch, "generator length differs from n");
    for (std::size_t t = 0; t < n; ++t) g.at(t, k) = gens[k][t];
  }
  return flag_from_matrix(g, w);
}

namespace {

// dims[k] = dim( span{e_c : c in coords} ∩ F^(k) ) for k = 0..n, computed as
// k minus the rank of the basis columns outside coords.
std::vector<std::size_t> union_dims(const HodgeFlag& flag, const std::vector<bool>& coords) {
  const std::size_t n = static_cast<std::size_t>(flag.n);
  std::vector<std::size_t> outside;
  for (std::size_t c = 0; c < n; ++c)
    if (!coords[c]) outside.push_back(c);
  std::vector<std::size_t> dims(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix& basis = flag.step(static_cast<int>(k)).basis();
    Matrix tail(k, outside.size());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < outside.size(); ++j) tail.at(i, j) = basis.at(i, outside[j]);
    dims[k] = k - rank(tail);
  }
  return dims;
}

// Memoizes union_dims by the block subset defining the union.
struct UnionDimCache {
  const HodgeFlag& flag;
  const BlockShape& shape;
  std::map<std::uint64_t, std::vector<std::size_t>> memo;

  const std::vector<std::size_t>& dims(std::uint64_t block_mask) {
    auto it = memo.find(block_mask);
    if (it != memo.end()) return it->second;
    std::vector<bool> coords(static_cast<std::size_t>(shape.n), false);
    auto cuts = shape.cuts();
    for (std::size_t b = 0; b < shape.block_count(); ++b) {
      if (!(block_mask & (1ull << b))) continue;
      const int start = (b == 0) ? 0 : cuts[b - 1];
      for (int t = start; t < cuts[b]; ++t) coords[static_cast<std::size_t>(t)] = true;
    }
    return memo.emplace(block_mask, union_dims(flag, coords)).first->second;
  }
};

// Relative position of the refinement flag of u — steps are the unions of
// the original blocks u^{-1}(1), ..., u^{-1}(l) — against the complete flag,
// as the maximal-length representative of its W_{S_0^u}-coset.
Permutation position_against_refinement(const BlockShape& shape, const Permutation& u,
                                        UnionDimCache& cache) {
  const int n = shape.n;
  auto tu = weyl::block_data(shape, u).cuts;
  const std::size_t s = tu.size();
  Permutation ui = u.inverse();

  std::vector<const std::vector<std::size_t>*> level_dims(s);
  std::uint64_t mask = 0;
  for (std::size_t l = 1; l <= s; ++l) {
    mask |= 1ull << (static_cast<std::size_t>(ui(static_cast<int>(l))) - 1);
    level_dims[l - 1] = &cache.dims(mask);
  }
  auto d = [&](std::size_t level, int k) -> std::size_t {
    if (level == 0 || k == 0) return 0;
    return (*level_dims[level - 1])[static_cast<std::size_t>(k)];
  };

  // beta(k): the level where the new line of F^(k) first meets the refinement
  // flag; the maximal representative assigns each level's index range to its
  // positions in decreasing order.
  std::vector<std::vector<int>> positions(s);
  for (int k = 1; k <= n; ++k) {
    for (std::size_t level = 1; level <= s; ++level)
      if (d(level, k) == d(level, k - 1) + 1) {
        positions[level - 1].push_back(k);
        break;
      }
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (std::size_t level = 1; level <= s; ++level) {
    int next = tu[level - 1];
    for (int k : positions[level - 1]) img[static_cast<std::size_t>(k) - 1] = next--;
  }
  return Permutation(std::move(img));
}

}  // namespace

Permutation relative_position(const BlockShape& shape, const Permutation& u,
                              const HodgeFlag& flag) {
  if (shape.n != flag.n) fail(ErrorKind::DimensionMismatch, "shape and flag sizes differ");
  UnionDimCache cache{flag, shape, {}};
  return position_against_refinement(shape, u, cache);
}

bool is_noncritical(const BlockShape& shape, const HodgeFlag& flag) {
  if (shape.n != flag.n) fail(ErrorKind::DimensionMismatch, "shape and flag sizes differ");
  UnionDimCache cache{flag, shape, {}};
  Permutation w0 = Permutation::longest(static_cast<std::size_t>(flag.n));
  for (const auto& u : weyl::enumerate_weyl(shape.block_count()))
    if (!(position_against_refinement(shape, u, cache) == w0)) return false;
  return true;
}

LineDecomposition extract_lines(const HodgeFlag& flag) {
  const int n = flag.n;
  LineDecomposition out;
  out.n = n;
  for (int l = 1; l <= n; ++l) {
    std::vector<std::size_t> prefix;
    for (int t = 0; t < l; ++t) prefix.push_back(static_cast<std::size_t>(t));
    Subspace cap = flag.step(n - l + 1).intersect(
        Subspace::coordinate(static_cast<std::size_t>(n), prefix));
    if (cap.dim() != 1)
      fail(ErrorKind::CriticalPosition,
           "line " + std::to_string(l) + " has dimension " + std::to_string(cap.dim()));
    std::vector<Rational> gen = cap.basis().row(0);
    if (gen[static_cast<std::size_t>(l) - 1].is_zero())
      fail(ErrorKind::CriticalPosition,
           "line " + std::to_string(l) + " has vanishing leading coordinate");
    Rational lead = gen[static_cast<std::size_t>(l) - 1];
    for (auto& c : gen) c = c / lead;
    out.gens.push_back(std::move(gen));
  }
  return out;
}

FlatLine flatten_line(const LineDecomposition& lines, int i, const BlockShape& shape) {
  if (lines.n != shape.n) fail(ErrorKind::DimensionMismatch, "lines and shape sizes differ");
  auto report = weyl::index_report(shape);
  if (!report.delta_prime.count(i)) fail(ErrorKind::BadSubset, "index not in Delta'");

  // Blocks common to every prefix I_{u,i}; their coordinates form D^(i).
  std::set<int> common;
  bool first = true;
  for (const auto& entry : report.cut_sets.at(i)) {
    if (first) {
      common = entry.prefix;
      first = false;
    } else {
      std::set<int> next;
      for (int b : entry.prefix)
        if (common.count(b)) next.insert(b);
      common = std::move(next);
    }
  }

  FlatLine out;
  out.i = i;
  std::vector<bool> deleted(static_cast<std::size_t>(shape.n), false);
  for (int pos = 1; pos <= shape.n; ++pos)
    if (common.count(shape.block_of(pos))) deleted[static_cast<std::size_t>(pos) - 1] = true;
  for (std::size_t c = 0; c < deleted.size(); ++c)
    if (!deleted[c]) out.kept_coords.push_back(c);

  out.line = lines.gens[static_cast<std::size_t>(i) - 1];
  for (std::size_t c = 0; c < deleted.size(); ++c)
    if (deleted[c]) out.line[c] = Rational(0);
  out.collapsed = std::all_of(out.line.begin(), out.line.end(),
                              [](const Rational& x) { return x.is_zero(); });
  return out;
}

namespace {

Rational det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
  Rational result(1);
  Rational scratch;
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && at(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(at(p, j), at(c, j));
      result = -result;
    }
    result *= at(c, c);
    Rational inv = at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (at(i, c).is_zero()) continue;
      Rational f = at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) at(i, j).submul(f, at(c, j), scratch);
    }
  }
  return result;
}

void subsets_of_size(int n, int k, std::vector<int>& cur, int start,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == k) {
    emit(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets_of_size(n, k, cur, v + 1, emit);
    cur.pop_back();
  }
}

}  // namespace

WedgeVector fil_max_wedge(const HodgeFlag& flag, int i) {
  const int n = flag.n;
  if (i < 1 || i > n - 1) fail(ErrorKind::BadDegree, "need 1 <= i <= n-1");
  if (n > 12) fail(ErrorKind::SizeGuard, "wedge coordinates limited to n <= 12");
  const int k = n - i;
  const Matrix& basis = flag.step(k).basis();
  WedgeVector w;
  w.n = n;
  w.degree = k;
  std::vector<int> cur;
  subsets_of_size(n, k, cur, 1, [&](const std::vector<int>& subset) {
    Matrix minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        minor.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
            basis.at(static_cast<std::size_t>(a), static_cast<std::size_t>(subset[b]) - 1);
    Rational d = det(minor);
    if (!d.is_zero()) w.coords[subset] = std::move(d);
  });
  return w;
}

Rational coefficient(const WedgeVector& w, const std::vector<int>& subset) {
  std::vector<int> key = subset;
  std::sort(key.begin(), key.end());
  auto it = w.coords.find(key);
  return it == w.coords.end() ? Rational(0) : it->second;
}

WedgeVector pr_flat(const WedgeVector& w, const BlockShape& shape, int i) {
  auto report = weyl::index_report(shape);
  if (!report.delta_prime.count(i)) fail(ErrorKind::BadSubset, "index not in Delta'");
  std::set<std::vector<int>> flats;
  auto cuts = shape.cuts();
  for (const auto& entry : report.cut_sets.at(i)) {
    std::vector<int> coords;
    for (int b : entry.complement) {
      const int start = (b == 1) ? 1 : cuts[static_cast<std::size_t>(b) - 2] + 1;
      for (int t = start; t <= cuts[static_cast<std::size_t>(b) - 1]; ++t) coords.push_back(t);
    }
    std::sort(coords.begin(), coords.end());
    flats.insert(std::move(coords));
  }
  WedgeVector out;
  out.n = w.n;
  out.degree = w.degree;
  for (const auto& [subset, coeff] : w.coords)
    if (flats.count(subset)) out.coords[subset] = coeff;
  return out;
}

WedgeVector wedge_with_vector(const WedgeVector& w, const std::vector<Rational>& v) {
  if (v.size() != static_cast<std::size_t>(w.n))
    fail(ErrorKind::DimensionMismatch, "vector length differs from wedge ambient");
  WedgeVector out;
  out.n = w.n;
  out.degree = w.degree + 1;
  for (const auto& [subset, coeff] : w.coords) {
    for (int t = 1; t <= w.n; ++t) {
      if (v[static_cast<std::size_t>(t) - 1].is_zero()) continue;
      if (std::binary_search(subset.begin(), subset.end(), t)) continue;
      std::vector<int> bigger = subset;
      auto pos = std::lower_bound(bigger.begin(), bigger.end(), t);
      const std::size_t above = static_cast<std::size_t>(bigger.end() - pos);
      bigger.insert(pos, t);
      Rational term = coeff * v[static_cast<std::size_t>(t) - 1];
      if (above % 2) term = -term;
      auto [it, fresh] = out.coords.try_emplace(std::move(bigger), term);
      if (!fresh) it->second += term;
    }
  }
  for (auto it = out.coords.begin(); it != out.coords.end();)
    it = it->second.is_zero() ? out.coords.erase(it) : std::next(it);
  return out;
}

HodgeFlag gl4_flag(const GL4Params& p, const Weights& w) {
  if (w.size() != 4) fail(ErrorKind::DimensionMismatch, "gl4 flag needs 4 weights");
  std::vector<std::vector<Rational>> gens = {
      {p.L14, Rational(1), p.L34, Rational(1)},
      {p.L13, p.L23, Rational(1), Rational(0)},
      {p.L12, Rational(1), Rational(0), Rational(0)},
      {Rational(1), Rational(0), Rational(0), Rational(0)},
  };
  return flag_from_generators(gens, w);
}

bool gl4_rebased_check(const GL4Params& p) {
  const Rational one(1);
  Rational d1 = p.L23 * p.L12 - p.L13;
  Rational d2 = p.L13 - p.L14 * p.L23;
  if (d1.is_zero()) fail(ErrorKind::DegenerateDenominator, "L23*L12 - L13 vanishes");
  if (d2.is_zero()) fail(ErrorKind::DegenerateDenominator, "L13 - L14*L23 vanishes");

  // Rewrite in the basis f = (e3, e4, e1, e2): new coordinate t reads the
  // old coordinate perm[t].
  const int perm[] = {3, 4, 1, 2};
  const std::vector<std::vector<Rational>> gens = {
      {p.L14, one, p.L34, one},
      {p.L13, p.L23, one, Rational(0)},
      {p.L12, one, Rational(0), Rational(0)},
      {one, Rational(0), Rational(0), Rational(0)},
  };
  std::vector<std::vector<Rational>> permuted;
  for (const auto& g : gens) {
    std::vector<Rational> moved(4);
    for (int t = 0; t < 4; ++t)
      moved[static_cast<std::size_t>(t)] = g[static_cast<std::size_t>(perm[t]) - 1];
    permuted.push_back(std::move(moved));
  }
  HodgeFlag rebased = flag_from_generators(permuted, Weights::standard(4));
  LineDecomposition lines = extract_lines(rebased);

  Rational a_coeff = ((one - p.L23 * p.L34) * (p.L12 - p.L14) + p.L34 * d2) / d1;
  std::vector<std::vector<Rational>> expected = {
      {one, Rational(0), Rational(0), Rational(0)},
      {-a_coeff, one, Rational(0), Rational(0)},
      {(one - p.L23 * p.L34) / d2, -(p.L23 / d2), one, Rational(0)},
      {p.L34, one, p.L14, one},
  };
  for (int l = 0; l < 4; ++l)
    if (lines.gens[static_cast<std::size_t>(l)] != expected[static_cast<std::size_t>(l)])
      return false;
  return true;
}

}  // namespace fernlab::hodge
