#include <doctest.h>

#include <map>

#include "fernlab/blockshape.hpp"
#include "fernlab/errors.hpp"
#include "fernlab/lie.hpp"

using namespace fernlab;
using weyl::BlockShape;
using weyl::Permutation;

TEST_CASE("weyl enumeration") {
  CHECK(weyl::enumerate_weyl(1).size() == 1);
  CHECK(weyl::enumerate_weyl(3).size() == 6);
  auto w4 = weyl::enumerate_weyl(4);
  CHECK(w4.size() == 24);
  CHECK(w4.front().is_identity());
  CHECK(std::is_sorted(w4.begin(), w4.end()));
  CHECK_THROWS_AS(weyl::enumerate_weyl(10), Error);
}

TEST_CASE("right descents") {
  CHECK(weyl::descent_right(Permutation::identity(4)).empty());
  CHECK(weyl::descent_right(Permutation({3, 2, 1})) == std::set<int>{1, 2});
  CHECK(weyl::descent_right(Permutation({2, 1, 3})) == std::set<int>{1});

  int with_d1 = 0;
  for (const auto& u : weyl::enumerate_weyl(3))
    if (weyl::descent_right(u) == std::set<int>{1}) ++with_d1;
  CHECK(with_d1 == 2);
}

TEST_CASE("descent map is surjective and partitions the group") {
  for (std::size_t s = 2; s <= 6; ++s) {
    std::map<std::set<int>, int> classes;
    for (const auto& u : weyl::enumerate_weyl(s)) classes[weyl::descent_right(u)]++;
    CHECK(classes.size() == (1u << (s - 1)));
    int total = 0;
    for (const auto& [J, count] : classes) total += count;
    int fact = 1;
    for (int i = 2; i <= static_cast<int>(s); ++i) fact *= i;
    CHECK(total == fact);
  }
}

TEST_CASE("minimal double coset representatives") {
  CHECK(weyl::min_coset_reps(2, {}, {}).size() == 2);

  auto full = weyl::min_coset_reps(3, {1, 2}, {});
  REQUIRE(full.size() == 1);
  CHECK(full[0].is_identity());

  auto one_sided = weyl::min_coset_reps(3, {1}, {});
  CHECK(one_sided.size() == 3);

  // descent characterization of minimality
  for (const auto& u : weyl::min_coset_reps(4, {1, 3}, {2})) {
    auto dl = weyl::descent_right(u.inverse());
    CHECK_FALSE(dl.count(1));
    CHECK_FALSE(dl.count(3));
    CHECK_FALSE(weyl::descent_right(u).count(2));
  }
}

TEST_CASE("block data") {
  BlockShape s112({1, 1, 2});
  auto d1 = weyl::block_data(s112, Permutation::identity(3));
  CHECK(d1.cuts == std::vector<int>{1, 2, 4});
  CHECK(d1.s0_u == std::set<int>{3});

  auto d2 = weyl::block_data(s112, Permutation({3, 2, 1}));
  CHECK(d2.cuts == std::vector<int>{2, 3, 4});
  CHECK(d2.s0_u == std::set<int>{1});

  BlockShape s22({2, 2});
  for (const auto& u : weyl::enumerate_weyl(2)) {
    auto d = weyl::block_data(s22, u);
    CHECK(d.cuts == std::vector<int>{2, 4});
    CHECK(d.s0_u == std::set<int>{1, 3});
  }
}

TEST_CASE("block data invariants") {
  for (auto comp : {std::vector<int>{1, 2, 3}, {2, 2, 1}, {3, 1}}) {
    BlockShape shape(comp);
    for (const auto& u : weyl::enumerate_weyl(shape.block_count())) {
      auto d = weyl::block_data(shape, u);
      CHECK(d.cuts.back() == shape.n);
      std::multiset<int> gaps, parts(comp.begin(), comp.end());
      int prev = 0;
      for (int t : d.cuts) {
        gaps.insert(t - prev);
        prev = t;
      }
      CHECK(gaps == parts);
    }
  }
}

TEST_CASE("block lift") {
  BlockShape s112({1, 1, 2});
  CHECK(weyl::block_lift(s112, Permutation::identity(3)).is_identity());

  BlockShape s22({2, 2});
  CHECK(weyl::block_lift(s22, Permutation({2, 1})) == Permutation({3, 4, 1, 2}));

  // The transposed (1,2) shape: the lift conjugates the Levi of shape (1,2)
  // to the Levi of shape (2,1).
  BlockShape s12({1, 2});
  Permutation lift = weyl::block_lift(s12, Permutation({2, 1}));
  CHECK(lift == Permutation({3, 1, 2}));
  auto levi12 = lie::standard_subalgebra(3, lie::SubalgebraKind::Levi, s12);
  auto levi21 = lie::standard_subalgebra(3, lie::SubalgebraKind::Levi, BlockShape({2, 1}));
  CHECK(lie::ad_permute(lift, levi12) == levi21);
}

TEST_CASE("block lift composes through permuted shapes") {
  auto permuted = [](const BlockShape& shape, const Permutation& v) {
    Permutation vi = v.inverse();
    std::vector<int> r(shape.block_count());
    for (std::size_t i = 1; i <= shape.block_count(); ++i)
      r[i - 1] = shape.r[static_cast<std::size_t>(vi(static_cast<int>(i))) - 1];
    return BlockShape(r);
  };
  for (auto comp : {std::vector<int>{1, 2, 3}, {1, 1, 2}, {2, 1, 1, 2}}) {
    BlockShape shape(comp);
    auto group = weyl::enumerate_weyl(shape.block_count());
    for (const auto& u : group)
      for (const auto& v : group) {
        auto lhs = weyl::block_lift(shape, u * v);
        auto rhs = weyl::block_lift(permuted(shape, v), u) * weyl::block_lift(shape, v);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("index report") {
  auto rep22 = weyl::index_report(BlockShape({2, 2}));
  CHECK(rep22.delta_prime == std::set<int>{2});
  REQUIRE(rep22.cut_sets.at(2).size() == 2);
  std::set<std::set<int>> prefixes;
  for (const auto& e : rep22.cut_sets.at(2)) prefixes.insert(e.prefix);
  CHECK(prefixes == std::set<std::set<int>>{{1}, {2}});

  CHECK(weyl::index_report(BlockShape({1, 1, 2})).delta_prime == std::set<int>{1, 2, 3});

  // all-ones: every cut achievable, ordered prefixes count n!/(n-i)!
  auto rep1 = weyl::index_report(BlockShape({1, 1, 1, 1}));
  CHECK(rep1.delta_prime == std::set<int>{1, 2, 3});
  for (int i = 1; i <= 3; ++i) {
    CHECK(rep1.cut_sets.at(i).size() == 24);  // every u cuts at level i
    std::set<std::vector<int>> ordered;
    for (const auto& e : rep1.cut_sets.at(i)) {
      std::vector<int> tuple;
      Permutation ui = e.u.inverse();
      for (int q = 1; q <= e.level; ++q) tuple.push_back(ui(q));
      ordered.insert(tuple);
    }
    int expect = 1;
    for (int q = 0; q < i; ++q) expect *= (4 - q);
    CHECK(static_cast<int>(ordered.size()) == expect);
  }

  // prefix sizes sum to the cut index; delta_prime indexes the cut sets
  for (auto comp : {std::vector<int>{1, 2, 2}, {1, 1, 3}}) {
    BlockShape shape(comp);
    auto rep = weyl::index_report(shape);
    std::set<int> keys;
    for (const auto& [i, entries] : rep.cut_sets) {
      keys.insert(i);
      CHECK_FALSE(entries.empty());
      for (const auto& e : entries) {
        int total = 0;
        for (int b : e.prefix) total += shape.r[static_cast<std::size_t>(b) - 1];
        CHECK(total == i);
      }
    }
    CHECK(keys == rep.delta_prime);
  }

  CHECK_THROWS_AS(weyl::index_report(BlockShape(std::vector<int>(9, 1))), Error);
}

TEST_CASE("r_plus") {
  auto rp = weyl::r_plus(Permutation::identity(3), {2});
  CHECK(rp.all == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(rp.effective == std::vector<std::pair<int, int>>{{2, 3}});

  for (std::size_t s = 2; s <= 5; ++s)
    CHECK(weyl::r_plus(Permutation::longest(s), {1, 2}).all.empty());

  auto rp_full = weyl::r_plus(Permutation::identity(4), {1, 2, 3});
  CHECK(rp_full.effective.size() == 3);

  // identity: effective pairs biject with i0_prime
  for (auto i0p : {std::set<int>{}, {1}, {1, 3}, {2}}) {
    auto rp_id = weyl::r_plus(Permutation::identity(4), i0p);
    CHECK(rp_id.effective.size() == i0p.size());
  }
}

TEST_CASE("shape from subset round trip") {
  BlockShape s({1, 2, 1});
  CHECK(weyl::shape_from_subset(4, s.s0()) == BlockShape({1, 2, 1}));
  CHECK(weyl::shape_from_subset(3, {}) == BlockShape({1, 1, 1}));
  CHECK(weyl::shape_from_subset(3, {1, 2}) == BlockShape({3}));
  CHECK_THROWS_AS(weyl::shape_from_subset(3, {5}), Error);
}
