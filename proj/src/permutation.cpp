#include "fernlab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "fernlab/errors.hpp"

namespace fernlab::weyl {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || static_cast<std::size_t>(v) > img_.size() || seen[v - 1])
      fail(ErrorKind::Validation, "one-line notation is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(std::size_t m) {
  std::vector<int> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<int>(m - i);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t m, int a, int b) {
  Permutation p = identity(m);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (size() != b.size()) fail(ErrorKind::DimensionMismatch, "permutation sizes differ");
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[b.img_[i] - 1];
  return Permutation(std::move(v));
}

std::size_t Permutation::length() const {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    for (std::size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::vector<Permutation> enumerate_weyl(std::size_t m) {
  if (m < 1 || m > 9) fail(ErrorKind::SizeGuard, "permutation enumeration limited to 1..9 letters");
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::set<int> descent_right(const Permutation& u) {
  std::set<int> d;
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u(static_cast<int>(i)) > u(static_cast<int>(i + 1))) d.insert(static_cast<int>(i));
  return d;
}

namespace {

// Greedy descent to the minimal element of W_I u W_J: multiply by simple
// reflections that shorten until none applies.
Permutation min_in_double_coset(Permutation u, const std::set<int>& I, const std::set<int>& J) {
  bool moved = true;
  while (moved) {
    moved = false;
    // left: length(s_i u) < length(u) iff u^{-1}(i) > u^{-1}(i+1)
    Permutation ui = u.inverse();
    for (int i : I) {
      if (ui(i) > ui(i + 1)) {
        auto v = u.one_line();
        std::swap(v[ui(i + 1) - 1], v[ui(i) - 1]);  // s_i * u
        u = Permutation(v);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    // right: length(u s_j) < length(u) iff u(j) > u(j+1)
    for (int j : J) {
      if (u(j) > u(j + 1)) {
        auto v = u.one_line();
        std::swap(v[j - 1], v[j]);  // u * s_j
        u = Permutation(v);
        moved = true;
        break;
      }
    }
  }
  return u;
}

void check_simple_subset(std::size_t m, const std::set<int>& I) {
  for (int i : I)
    if (i < 1 || static_cast<std::size_t>(i) >= m)
      fail(ErrorKind::BadSubset, "subset not within the simple reflections");
}

}  // namespace

std::vector<Permutation> min_coset_reps(std::size_t m, const std::set<int>& I,
                                        const std::set<int>& J) {
  check_simple_subset(m, I);
  check_simple_subset(m, J);
  std::set<Permutation> reps;
  for (const auto& w : enumerate_weyl(m)) reps.insert(min_in_double_coset(w, I, J));
  return {reps.begin(), reps.end()};
}

}  // namespace fernlab::weyl
