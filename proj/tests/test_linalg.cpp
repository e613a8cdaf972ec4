#include <doctest.h>

#include "fernlab/errors.hpp"
#include "fernlab/scenario.hpp"
#include "fernlab/subspace.hpp"

using namespace fernlab;

namespace {

std::vector<Rational> vec(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

Subspace random_subspace(cli::Rng& rng, std::size_t ambient, std::size_t generators) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < generators; ++i) {
    std::vector<Rational> v(ambient);
    for (auto& x : v) x = Rational(rng.uniform(-5, 5));
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, ambient);
}

}  // namespace

TEST_CASE("rref on the pinned examples") {
  auto [d, dp] = rref(Matrix{{2, 0}, {0, 3}});
  CHECK(d == Matrix{{1, 0}, {0, 1}});
  CHECK(dp == std::vector<std::size_t>{0, 1});

  auto [r1, p1] = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r1 == Matrix{{1, 2}});
  CHECK(p1 == std::vector<std::size_t>{0});

  auto [z, pz] = rref(Matrix{{0, 0}});
  CHECK(z.rows() == 0);
  CHECK(pz.empty());
}

TEST_CASE("rref is idempotent") {
  cli::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = Rational(rng.uniform(-9, 9));
    auto [red, p] = rref(m);
    auto [red2, p2] = rref(red);
    CHECK(red == red2);
    CHECK(p == p2);
  }
}

TEST_CASE("span canonicity") {
  auto s = Subspace::span({vec({1, 1}), vec({2, 2})}, 2);
  CHECK(s.dim() == 1);
  CHECK(s.basis() == Matrix{{1, 1}});

  CHECK(Subspace::span({}, 3).dim() == 0);

  auto t = Subspace::span({vec({1, 0, 0}), vec({1, 1, 0})}, 3);
  CHECK(t.dim() == 2);
  CHECK(t.basis() == Matrix{{1, 0, 0}, {0, 1, 0}});

  // independent of ordering and scaling
  cli::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> v(4);
      for (auto& x : v) x = Rational(rng.uniform(-4, 4));
      rows.push_back(v);
    }
    auto a = Subspace::span(rows, 4);
    std::vector<std::vector<Rational>> shuffled = {rows[2], rows[0], rows[1]};
    for (auto& v : shuffled)
      for (auto& x : v) x *= Rational(-3, 7);
    CHECK(a == Subspace::span(shuffled, 4));
  }

  CHECK_THROWS_AS(Subspace::span({vec({1, 2})}, 3), Error);
}

TEST_CASE("sum of subspaces") {
  auto e1 = Subspace::span({vec({1, 0})}, 2);
  auto e2 = Subspace::span({vec({0, 1})}, 2);
  CHECK(e1.sum(e2) == Subspace::full(2));
  CHECK(e1.sum(e1) == e1);
  CHECK(Subspace::span({vec({1, 0, 0})}, 3).sum(Subspace::span({vec({1, 1, 0})}, 3)).dim() == 2);
  CHECK_THROWS_AS(e1.sum(Subspace::full(3)), Error);
}

TEST_CASE("intersection on the pinned examples") {
  auto plane = Subspace::full(2);
  auto diag = Subspace::span({vec({1, 1})}, 2);
  CHECK(plane.intersect(diag) == diag);

  auto e1 = Subspace::span({vec({1, 0})}, 2);
  auto e2 = Subspace::span({vec({0, 1})}, 2);
  CHECK(e1.intersect(e2).dim() == 0);
}

TEST_CASE("modular dimension law") {
  cli::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_subspace(rng, 4, 3);
    auto b = random_subspace(rng, 4, 2);
    auto meet = a.intersect(b);
    auto join = a.sum(b);
    CHECK(a.dim() + b.dim() == join.dim() + meet.dim());
    CHECK(meet.compare(a) != SpaceRelation::Incomparable);
    CHECK(meet.compare(join) != SpaceRelation::Incomparable);
  }
}

TEST_CASE("coordinate-subspace intersection agrees with the generic route") {
  // The coordinate fast path must return exactly A ∩ B: contained in both,
  // and of the dimension forced by the modular law.
  cli::Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < 5; ++c)
      if (rng.uniform(0, 1)) coords.push_back(c);
    auto a = Subspace::coordinate(5, coords);
    auto b = random_subspace(rng, 5, 3);
    auto meet = a.intersect(b);
    CHECK(meet.dim() == a.dim() + b.dim() - a.sum(b).dim());
    for (std::size_t i = 0; i < meet.dim(); ++i) {
      CHECK(a.contains(meet.basis().row(i)));
      CHECK(b.contains(meet.basis().row(i)));
    }
  }
}

TEST_CASE("compare relations") {
  auto v = Subspace::span({vec({1, 2, 0}), vec({0, 0, 1})}, 3);
  CHECK(v.compare(v) == SpaceRelation::Equal);
  auto line = Subspace::span({vec({1, 2, 0})}, 3);
  CHECK(line.compare(v) == SpaceRelation::AInB);
  CHECK(v.compare(line) == SpaceRelation::BInA);
  auto other = Subspace::span({vec({0, 1, 0})}, 3);
  CHECK(line.compare(other) == SpaceRelation::Incomparable);
}

TEST_CASE("matrix inverse and singularity") {
  Matrix g{{1, 2}, {3, 4}};
  Matrix gi = g.inverse();
  CHECK(g * gi == Matrix::identity(2));
  CHECK_THROWS_AS(Matrix({{1, 2}, {2, 4}}).inverse(), Error);
  CHECK_FALSE(Matrix({{1, 2}, {2, 4}}).is_invertible());
}
