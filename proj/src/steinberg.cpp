#include "fernlab/steinberg.hpp"

#include <algorithm>
#include <sstream>

#include "fernlab/errors.hpp"

namespace fernlab::steinberg {

namespace {

void check_label(int k, const FactorLabel& J) {
  for (int j : J)
    if (j < 1 || j >= k) fail(ErrorKind::BadSubset, "label not inside {1..k-1}");
}

std::string label_str(const FactorLabel& J) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j : J) {
    if (!first) os << ',';
    os << j;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

Segment::Segment(int k_, int r_) : k(k_), r(r_) {
  if (k < 1 || r < 1) fail(ErrorKind::Validation, "segment needs k >= 1 and r >= 1");
}

std::pair<FactorLabel, FactorLabel> socle_cosocle(const Segment& seg, const Permutation& u) {
  if (u.size() != static_cast<std::size_t>(seg.k))
    fail(ErrorKind::DimensionMismatch, "permutation letters differ from segment length");
  FactorLabel cosocle = weyl::descent_right(u);
  FactorLabel socle;
  for (int j = 1; j < seg.k; ++j)
    if (!cosocle.count(j)) socle.insert(j);
  return {socle, cosocle};
}

std::vector<Permutation> jacquet_fiber(const Segment& seg, const FactorLabel& J) {
  if (seg.k > 8) fail(ErrorKind::SizeGuard, "fiber enumeration limited to k <= 8");
  check_label(seg.k, J);
  FactorLabel want;  // D_R(u) = Delta_k \ J
  for (int j = 1; j < seg.k; ++j)
    if (!J.count(j)) want.insert(j);
  std::vector<Permutation> out;
  for (const auto& u : weyl::enumerate_weyl(static_cast<std::size_t>(seg.k)))
    if (weyl::descent_right(u) == want) out.push_back(u);
  return out;
}

Permutation realize_descent(int k, const FactorLabel& J) {
  check_label(k, J);
  std::vector<int> img(static_cast<std::size_t>(k));
  int next = 1;
  int start = 1;
  while (start <= k) {
    int end = start;
    while (end < k && J.count(end)) ++end;  // positions start..end form a run
    const int len = end - start + 1;
    for (int t = 0; t < len; ++t) img[static_cast<std::size_t>(start + t) - 1] = next + len - 1 - t;
    next += len;
    start = end + 1;
  }
  return Permutation(std::move(img));
}

Interval q_interval(const FactorLabel& j0, const FactorLabel& j1) {
  Interval iv;
  iv.lower = j0;
  iv.upper = j1;
  FactorLabel base;
  std::vector<int> sym;
  for (int j : j0)
    if (j1.count(j)) base.insert(j);
  {
    FactorLabel uni = j0;
    uni.insert(j1.begin(), j1.end());
    for (int j : uni)
      if (!base.count(j)) sym.push_back(j);
  }
  const std::size_t bits = sym.size();
  for (std::size_t mask = 0; mask < (1ull << bits); ++mask) {
    FactorLabel member = base;
    for (std::size_t b = 0; b < bits; ++b)
      if (mask & (1ull << b)) member.insert(sym[b]);
    iv.members.push_back(std::move(member));
  }
  std::sort(iv.members.begin(), iv.members.end());
  return iv;
}

std::int64_t generic_constituent_count(int s, int d_l) {
  if (s < 1 || d_l < 1) fail(ErrorKind::Validation, "need s >= 1 and d_L >= 1");
  if (s > 62) fail(ErrorKind::SizeGuard, "count overflows past s = 62");
  return static_cast<std::int64_t>(d_l) * ((std::int64_t{1} << s) - 2);
}

Interval validate_pm_pair(int k, const FactorLabel& iplus, const FactorLabel& iminus) {
  check_label(k, iplus);
  check_label(k, iminus);
  for (int j : iplus)
    if (iminus.count(j)) fail(ErrorKind::Validation, "I^+ and I^- must be disjoint");
  Interval iv = q_interval(iplus, iminus);
  std::size_t sym = iplus.size() + iminus.size();  // disjoint, so the symmetric difference
  if (iv.members.size() != (1ull << sym))
    fail(ErrorKind::Validation, "interval size mismatch");
  return iv;
}

std::string interval_dot(const Interval& iv) {
  std::ostringstream os;
  os << "digraph interval {\n";
  os << "  rankdir=BT;\n";
  for (const auto& m : iv.members) os << "  \"" << label_str(m) << "\";\n";
  for (const auto& lo : iv.members)
    for (const auto& hi : iv.members) {
      if (hi.size() != lo.size() + 1) continue;
      if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) continue;
      os << "  \"" << label_str(lo) << "\" -> \"" << label_str(hi) << "\";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace fernlab::steinberg
