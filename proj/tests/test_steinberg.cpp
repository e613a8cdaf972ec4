#include <doctest.h>

#include "fernlab/errors.hpp"
#include "fernlab/steinberg.hpp"

using namespace fernlab;
using steinberg::FactorLabel;
using steinberg::Segment;
using weyl::Permutation;

TEST_CASE("socle and cosocle labels") {
  Segment seg2(2, 1);
  auto [soc_id, cos_id] = steinberg::socle_cosocle(seg2, Permutation::identity(2));
  CHECK(soc_id == FactorLabel{1});
  CHECK(cos_id == FactorLabel{});

  auto [soc_w, cos_w] = steinberg::socle_cosocle(seg2, Permutation({2, 1}));
  CHECK(soc_w == FactorLabel{});
  CHECK(cos_w == FactorLabel{1});

  Segment seg3(3, 2);
  auto [soc, cos] = steinberg::socle_cosocle(seg3, Permutation({2, 1, 3}));
  CHECK(soc == FactorLabel{2});
  CHECK(cos == FactorLabel{1});
}

TEST_CASE("socle and cosocle are complementary") {
  Segment seg(4, 1);
  for (const auto& u : weyl::enumerate_weyl(4)) {
    auto [soc, cos] = steinberg::socle_cosocle(seg, u);
    FactorLabel all;
    all.insert(soc.begin(), soc.end());
    all.insert(cos.begin(), cos.end());
    CHECK(all == FactorLabel{1, 2, 3});
    for (int j : soc) CHECK_FALSE(cos.count(j));
  }
}

TEST_CASE("jacquet fibers") {
  Segment seg3(3, 1);
  auto top = steinberg::jacquet_fiber(seg3, {1, 2});
  REQUIRE(top.size() == 1);
  CHECK(top[0].is_identity());

  auto bottom = steinberg::jacquet_fiber(seg3, {});
  REQUIRE(bottom.size() == 1);
  CHECK(bottom[0] == Permutation::longest(3));

  CHECK(steinberg::jacquet_fiber(seg3, {2}).size() == 2);
  CHECK_THROWS_AS(steinberg::jacquet_fiber(Segment(9, 1), {}), Error);
}

TEST_CASE("fibers partition the group") {
  for (int k = 2; k <= 6; ++k) {
    Segment seg(k, 1);
    std::size_t total = 0;
    std::vector<int> base;
    for (int j = 1; j < k; ++j) base.push_back(j);
    for (std::size_t mask = 0; mask < (1ull << base.size()); ++mask) {
      FactorLabel J;
      for (std::size_t b = 0; b < base.size(); ++b)
        if (mask & (1ull << b)) J.insert(base[b]);
      total += steinberg::jacquet_fiber(seg, J).size();
    }
    std::size_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= static_cast<std::size_t>(i);
    CHECK(total == fact);
  }
}

TEST_CASE("realize_descent") {
  CHECK(steinberg::realize_descent(4, {}).is_identity());
  CHECK(steinberg::realize_descent(4, {1, 2, 3}) == Permutation::longest(4));
  CHECK(steinberg::realize_descent(4, {2}) == Permutation({1, 3, 2, 4}));

  for (int k = 2; k <= 7; ++k) {
    std::vector<int> base;
    for (int j = 1; j < k; ++j) base.push_back(j);
    for (std::size_t mask = 0; mask < (1ull << base.size()); ++mask) {
      FactorLabel J;
      for (std::size_t b = 0; b < base.size(); ++b)
        if (mask & (1ull << b)) J.insert(base[b]);
      CHECK(weyl::descent_right(steinberg::realize_descent(k, J)) == J);
    }
  }
}

TEST_CASE("q_interval") {
  auto single = steinberg::q_interval({1, 3}, {1, 3});
  CHECK(single.members == std::vector<FactorLabel>{{1, 3}});

  auto four = steinberg::q_interval({1}, {2});
  CHECK(four.members.size() == 4);
  CHECK(std::find(four.members.begin(), four.members.end(), FactorLabel{}) != four.members.end());
  CHECK(std::find(four.members.begin(), four.members.end(), FactorLabel{1, 2}) != four.members.end());

  FactorLabel full{1, 2, 3};
  CHECK(steinberg::q_interval({}, full).members.size() == 8);

  // symmetric in the two labels, size 2^{|symmetric difference|}
  for (auto [a, b] : std::vector<std::pair<FactorLabel, FactorLabel>>{
           {{1}, {2, 3}}, {{1, 2}, {2}}, {{}, {}}, {{3}, {1, 3}}}) {
    auto ab = steinberg::q_interval(a, b);
    auto ba = steinberg::q_interval(b, a);
    CHECK(ab.members == ba.members);
    std::size_t sym = 0;
    for (int j : a)
      if (!b.count(j)) ++sym;
    for (int j : b)
      if (!a.count(j)) ++sym;
    CHECK(ab.members.size() == (1ull << sym));
  }
}

TEST_CASE("generic constituent count") {
  CHECK(steinberg::generic_constituent_count(2, 1) == 2);
  CHECK(steinberg::generic_constituent_count(1, 5) == 0);
  CHECK(steinberg::generic_constituent_count(3, 2) == 12);

  // cross-check against the coset enumeration
  for (int s = 2; s <= 6; ++s) {
    std::set<int> delta;
    for (int j = 1; j < s; ++j) delta.insert(j);
    std::int64_t total = 0;
    for (int j = 1; j < s; ++j) {
      std::set<int> jhat = delta;
      jhat.erase(j);
      total += static_cast<std::int64_t>(
          weyl::min_coset_reps(static_cast<std::size_t>(s), jhat, {}).size());
    }
    CHECK(steinberg::generic_constituent_count(s, 1) == total);
    CHECK(steinberg::generic_constituent_count(s, 3) == 3 * total);
  }
}

TEST_CASE("pm pair validation") {
  auto iv = steinberg::validate_pm_pair(4, {1}, {3});
  CHECK(iv.members.size() == 4);
  CHECK_THROWS_AS(steinberg::validate_pm_pair(4, {1, 2}, {2}), Error);
  CHECK_THROWS_AS(steinberg::validate_pm_pair(3, {5}, {}), Error);
}

TEST_CASE("interval DOT output") {
  auto iv = steinberg::q_interval({1}, {2});
  std::string dot = steinberg::interval_dot(iv);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"{}\"") != std::string::npos);
  CHECK(dot.find("\"{1,2}\"") != std::string::npos);
  CHECK(dot.find("\"{}\" -> \"{1}\"") != std::string::npos);
  CHECK(dot.find("\"{1}\" -> \"{1,2}\"") != std::string::npos);
  // 4 nodes, 4 covering edges
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
    ++arrows;
  CHECK(arrows == 4);
}
