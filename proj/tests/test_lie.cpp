#include <doctest.h>

#include "fernlab/errors.hpp"
#include "fernlab/lie.hpp"
#include "fernlab/scenario.hpp"

using namespace fernlab;
using lie::EnvelopeKind;
using lie::SubalgebraKind;
using weyl::BlockShape;
using weyl::Permutation;

TEST_CASE("standard subalgebra dimensions") {
  CHECK(lie::standard_subalgebra(3, SubalgebraKind::Borel).dim() == 6);
  CHECK(lie::standard_subalgebra(3, SubalgebraKind::OppositeBorel).dim() == 6);

  BlockShape s112({1, 1, 2});
  CHECK(lie::standard_subalgebra(4, SubalgebraKind::Nilradical, s112).dim() == 5);
  CHECK(lie::standard_subalgebra(4, SubalgebraKind::Tau, s112).dim() == 8);
  CHECK(lie::standard_subalgebra(4, SubalgebraKind::LeviCenter, s112).dim() == 3);
  CHECK(lie::standard_subalgebra(4, SubalgebraKind::Levi, s112).dim() == 6);
  CHECK(lie::standard_subalgebra(4, SubalgebraKind::LeviTraceless, s112).dim() == 3);
  CHECK(lie::standard_subalgebra(4, SubalgebraKind::ParabolicTraceless, s112).dim() == 8);

  BlockShape s12({1, 2});
  CHECK(lie::standard_subalgebra(3, SubalgebraKind::Parabolic, s12).dim() == 7);
  // dim p = n^2 - dim of the opposite nilradical
  CHECK(lie::standard_subalgebra(3, SubalgebraKind::Parabolic, s12).dim() ==
        9 - lie::standard_subalgebra(3, SubalgebraKind::Nilradical, s12).dim());
}

TEST_CASE("tau splits as center plus nilradical") {
  for (auto comp : {std::vector<int>{2, 2}, {1, 1, 3}, {1, 2, 1}}) {
    BlockShape shape(comp);
    auto tau = lie::standard_subalgebra(shape.n, SubalgebraKind::Tau, shape);
    CHECK(tau.dim() == shape.block_count() +
                           lie::standard_subalgebra(shape.n, SubalgebraKind::Nilradical, shape).dim());
    auto para = lie::standard_subalgebra(shape.n, SubalgebraKind::Parabolic, shape);
    CHECK(tau.space.compare(para.space) == SpaceRelation::AInB);
  }
}

TEST_CASE("adjoint conjugation") {
  auto borel = lie::standard_subalgebra(3, SubalgebraKind::Borel);
  CHECK(lie::ad_conj(Matrix::identity(3), borel) == borel);

  Matrix w0 = Permutation::longest(3).matrix();
  CHECK(lie::ad_conj(w0, borel) == lie::standard_subalgebra(3, SubalgebraKind::OppositeBorel));

  cli::Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix g = cli::sample_generic_g(BlockShape({1, 1, 1}), rng);
    auto conj = lie::ad_conj(g, borel);
    CHECK(conj.dim() == borel.dim());
  }

  CHECK_THROWS_AS(lie::ad_conj(Matrix{{1, 1}, {1, 1}}, lie::standard_subalgebra(2, SubalgebraKind::Borel)),
                  Error);
}

TEST_CASE("ad_permute matches matrix conjugation") {
  cli::Rng rng(7);
  BlockShape shape({1, 2, 1});
  auto tau = lie::standard_subalgebra(4, SubalgebraKind::Tau, shape);
  for (const auto& u : weyl::enumerate_weyl(4)) {
    CHECK(lie::ad_permute(u, tau) == lie::ad_conj(u.matrix(), tau));
    if (rng.uniform(0, 3) == 0) break;  // a few cases suffice
  }
}

TEST_CASE("envelope equals the full conjugated Borel when S0 is empty") {
  BlockShape s111({1, 1, 1});
  cli::Rng rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    Matrix g = cli::sample_generic_g(s111, rng);
    auto adgb = lie::ad_conj(g, lie::standard_subalgebra(3, SubalgebraKind::Borel));
    auto circ = lie::envelope(g, s111, EnvelopeKind::Circ);
    CHECK(circ == adgb);
    CHECK(circ.dim() == 6);
  }
}

TEST_CASE("envelope containment chain and b'-invariance") {
  BlockShape s22({2, 2});
  cli::Rng rng(43);
  Matrix g = cli::sample_generic_g(s22, rng);
  auto adgb = lie::ad_conj(g, lie::standard_subalgebra(4, SubalgebraKind::Borel));
  auto circ = lie::envelope(g, s22, EnvelopeKind::Circ);
  auto full = lie::envelope(g, s22, EnvelopeKind::Full);
  CHECK(circ.space.compare(full.space) != SpaceRelation::Incomparable);
  CHECK(circ.dim() <= full.dim());
  CHECK(full.space.compare(adgb.space) != SpaceRelation::BInA);
  CHECK(2 <= circ.dim());
  CHECK(circ.dim() <= 10);

  // Ad_g(b) is unchanged under g -> g*b' for upper-triangular b'
  Matrix bp = Matrix::identity(4);
  bp.at(0, 1) = Rational(5);
  bp.at(1, 3) = Rational(-2);
  bp.at(2, 2) = Rational(3);
  auto adgb2 = lie::ad_conj(g * bp, lie::standard_subalgebra(4, SubalgebraKind::Borel));
  CHECK(adgb2 == adgb);
  CHECK(lie::envelope(g * bp, s22, EnvelopeKind::Circ).dim() == circ.dim());
}

TEST_CASE("envelope size guard") {
  BlockShape nine(std::vector<int>(9, 1));
  CHECK_THROWS_AS(lie::envelope(Matrix::identity(9), nine, EnvelopeKind::Circ), Error);
  CHECK_THROWS_AS(lie::summand_dims(Matrix::identity(9), nine), Error);
}

TEST_CASE("full envelope saturates for generic g") {
  cli::Rng rng(47);
  for (auto comp : {std::vector<int>{1, 2}, {1, 1, 2}}) {
    BlockShape shape(comp);
    Matrix g = cli::sample_generic_g(shape, rng);
    auto adgb = lie::ad_conj(g, lie::standard_subalgebra(shape.n, SubalgebraKind::Borel));
    CHECK(lie::envelope(g, shape, EnvelopeKind::Full) == adgb);
  }
}

TEST_CASE("summand dimensions at non-critical g") {
  cli::Rng rng(53);
  BlockShape s22({2, 2});
  Matrix g = cli::sample_generic_g(s22, rng);
  for (const auto& row : lie::summand_dims(g, s22)) {
    CHECK(row.tau_dim == 2);
    CHECK(row.p_dim == 6);
  }

  BlockShape s111({1, 1, 1});
  Matrix g3 = cli::sample_generic_g(s111, rng);
  for (const auto& row : lie::summand_dims(g3, s111)) CHECK(row.tau_dim == 3);

  // critical g = identity: the identity summand is tau ∩ b = tau itself
  auto rows = lie::summand_dims(Matrix::identity(4), s22);
  CHECK(rows.front().u.is_identity());
  CHECK(rows.front().tau_dim == lie::standard_subalgebra(4, SubalgebraKind::Tau, s22).dim());
}

TEST_CASE("fern witness on the 2x2 base case") {
  BlockShape s11({1, 1});
  auto w = lie::fern_witness(2, 1, Matrix::identity(2), s11);
  CHECK(w.u == Permutation({2, 1}));
  CHECK(w.witness == Matrix{{0, 0}, {1, 0}});
  REQUIRE(w.x.size() == 1);
  CHECK(w.x[0] == Rational(0));
  CHECK(w.member);
}

TEST_CASE("fern witnesses are members with the expected support") {
  cli::Rng rng(59);
  for (auto comp : {std::vector<int>{1, 1, 1}, {1, 2}, {2, 2}}) {
    BlockShape shape(comp);
    Matrix b = cli::sample_unit_upper(shape.n, rng);
    for (int i = 2; i <= shape.n; ++i)
      for (int j = 1; j < i; ++j) {
        auto w = lie::fern_witness(i, j, b, shape);
        CHECK(w.member);
        CHECK(w.witness.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) ==
              Rational(1));
        for (int row = 1; row <= shape.n; ++row)
          for (int col = 1; col <= shape.n; ++col) {
            if (row == i && j <= col && col <= i) continue;
            CHECK(w.witness.at(static_cast<std::size_t>(row) - 1,
                               static_cast<std::size_t>(col) - 1) == Rational(0));
          }
      }
  }
}

TEST_CASE("fern witness rejects degenerate b") {
  BlockShape s11({1, 1});
  CHECK_THROWS_AS(lie::fern_witness(2, 1, Matrix{{0, 1}, {1, 0}}, s11), Error);
  CHECK_THROWS_AS(lie::fern_witness(2, 2, Matrix::identity(2), s11), Error);
}

TEST_CASE("fern check spans the opposite Borel") {
  cli::Rng rng(61);
  for (auto comp : {std::vector<int>{1, 1, 1}, {1, 2}, {1, 1, 2}}) {
    BlockShape shape(comp);
    Matrix b = cli::sample_unit_upper(shape.n, rng);
    auto check = lie::fern_check(b, shape);
    CHECK(check.all_members);
    CHECK(check.spans);
    CHECK(check.witnesses.size() == static_cast<std::size_t>(shape.n * (shape.n - 1) / 2));
  }
}
