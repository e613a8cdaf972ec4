#include "fernlab/blockshape.hpp"

#include <numeric>

#include "fernlab/errors.hpp"

namespace fernlab::weyl {

BlockShape::BlockShape(std::vector<int> comp, std::set<int> i0p)
    : r(std::move(comp)), i0_prime(std::move(i0p)) {
  if (r.empty()) fail(ErrorKind::Validation, "empty composition");
  n = 0;
  for (int x : r) {
    if (x < 1) fail(ErrorKind::Validation, "composition parts must be >= 1");
    n += x;
  }
  for (int i : i0_prime)
    if (i < 1 || static_cast<std::size_t>(i) >= r.size())
      fail(ErrorKind::BadSubset, "i0_prime must lie in {1..s-1}");
}

int BlockShape::block_of(int x) const {
  int acc = 0;
  for (std::size_t b = 0; b < r.size(); ++b) {
    acc += r[b];
    if (x <= acc) return static_cast<int>(b + 1);
  }
  fail(ErrorKind::Validation, "position outside 1..n");
}

std::vector<int> BlockShape::cuts() const {
  std::vector<int> t(r.size());
  std::partial_sum(r.begin(), r.end(), t.begin());
  return t;
}

std::set<int> BlockShape::s0() const {
  std::set<int> s;
  for (int i = 1; i < n; ++i) s.insert(i);
  auto t = cuts();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) s.erase(t[i]);
  return s;
}

BlockShape shape_from_subset(int n, const std::set<int>& I) {
  for (int i : I)
    if (i < 1 || i >= n) fail(ErrorKind::BadSubset, "subset not within {1..n-1}");
  std::vector<int> comp;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (I.count(i)) {
      ++run;
    } else {
      comp.push_back(run);
      run = 1;
    }
  }
  comp.push_back(run);
  return BlockShape(comp);
}

BlockData block_data(const BlockShape& shape, const Permutation& u) {
  if (u.size() != shape.block_count())
    fail(ErrorKind::DimensionMismatch, "permutation letters differ from block count");
  Permutation ui = u.inverse();
  BlockData out;
  int acc = 0;
  for (std::size_t i = 1; i <= shape.block_count(); ++i) {
    acc += shape.r[static_cast<std::size_t>(ui(static_cast<int>(i))) - 1];
    out.cuts.push_back(acc);
  }
  for (int i = 1; i < shape.n; ++i) out.s0_u.insert(i);
  for (std::size_t i = 0; i + 1 < out.cuts.size(); ++i) out.s0_u.erase(out.cuts[i]);
  return out;
}

Permutation block_lift(const BlockShape& shape, const Permutation& u) {
  if (u.size() != shape.block_count())
    fail(ErrorKind::DimensionMismatch, "permutation letters differ from block count");
  auto t = shape.cuts();
  auto tu = block_data(shape, u).cuts;
  std::vector<int> img(static_cast<std::size_t>(shape.n));
  for (std::size_t b = 1; b <= shape.block_count(); ++b) {
    const int src = (b == 1) ? 0 : t[b - 2];
    const int pos = u(static_cast<int>(b));
    const int dst = (pos == 1) ? 0 : tu[static_cast<std::size_t>(pos) - 2];
    for (int j = 1; j <= shape.r[b - 1]; ++j) img[static_cast<std::size_t>(src + j) - 1] = dst + j;
  }
  return Permutation(std::move(img));
}

BlockShape permuted_shape(const BlockShape& shape, const Permutation& u) {
  if (u.size() != shape.block_count())
    fail(ErrorKind::DimensionMismatch, "permutation letters differ from block count");
  Permutation ui = u.inverse();
  std::vector<int> r(shape.block_count());
  for (std::size_t i = 1; i <= shape.block_count(); ++i)
    r[i - 1] = shape.r[static_cast<std::size_t>(ui(static_cast<int>(i))) - 1];
  return BlockShape(r);
}

IndexReport index_report(const BlockShape& shape) {
  if (shape.block_count() > 8) fail(ErrorKind::SizeGuard, "index report limited to s <= 8");
  IndexReport rep;
  for (const auto& u : enumerate_weyl(shape.block_count())) {
    auto data = block_data(shape, u);
    Permutation ui = u.inverse();
    for (std::size_t l = 1; l < shape.block_count(); ++l) {
      const int i = data.cuts[l - 1];
      rep.delta_prime.insert(i);
      CutEntry entry;
      entry.u = u;
      entry.level = static_cast<int>(l);
      for (std::size_t q = 1; q <= l; ++q) entry.prefix.insert(ui(static_cast<int>(q)));
      for (std::size_t b = 1; b <= shape.block_count(); ++b)
        if (!entry.prefix.count(static_cast<int>(b))) entry.complement.insert(static_cast<int>(b));
      rep.cut_sets[i].push_back(std::move(entry));
    }
  }
  return rep;
}

RPlus r_plus(const Permutation& u, const std::set<int>& i0_prime) {
  RPlus out;
  Permutation ui = u.inverse();
  const int s = static_cast<int>(u.size());
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (ui(j) == ui(i) + 1) {
        out.all.emplace_back(i, j);
        if (i0_prime.count(ui(i))) out.effective.emplace_back(i, j);
      }
  return out;
}

}  // namespace fernlab::weyl
