#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fernlab/blockshape.hpp"
#include "fernlab/subspace.hpp"

namespace fernlab::lie {

using weyl::BlockShape;
using weyl::Permutation;

// Linear subspace of gl_n, stored canonically as a Subspace of the
// n^2-dimensional coordinate space (row-major flattening).
struct LieSubspace {
  int n = 0;
  Subspace space;

  LieSubspace() = default;
  LieSubspace(int n_, Subspace s) : n(n_), space(std::move(s)) {}
  std::size_t dim() const { return space.dim(); }
  bool contains(const Matrix& x) const;
  bool operator==(const LieSubspace& o) const { return n == o.n && space == o.space; }
};

std::vector<Rational> flatten(const Matrix& x);
Matrix unflatten(const std::vector<Rational>& v, int n);

enum class SubalgebraKind {
  Borel,
  OppositeBorel,
  Parabolic,
  Levi,
  Nilradical,
  LeviCenter,
  LeviTraceless,
  ParabolicTraceless,
  Tau,
};

// Standard subalgebras of gl_n attached to a block shape (the Borel pair
// ignores the shape). Tau = LeviCenter + Nilradical; ParabolicTraceless =
// LeviTraceless + Nilradical.
LieSubspace standard_subalgebra(int n, SubalgebraKind kind, const BlockShape& shape);
LieSubspace standard_subalgebra(int n, SubalgebraKind kind);  // Borel / OppositeBorel

// span{ g x g^{-1} : x basis of V }. Throws Singular when g is not invertible.
LieSubspace ad_conj(const Matrix& g, const LieSubspace& v);

// Conjugation by the permutation matrix of w (coordinate relabelling).
LieSubspace ad_permute(const Permutation& w, const LieSubspace& v);

enum class EnvelopeKind { Circ, Full };

// Sum over u in W_s of Ad_{u#}(tau or p) ∩ Ad_g(b), folded in lexicographic
// order of u; Full exits early once the dimension of Ad_g(b) is reached.
LieSubspace envelope(const Matrix& g, const BlockShape& shape, EnvelopeKind kind);

struct SummandDims {
  Permutation u;
  std::size_t tau_dim = 0;
  std::size_t p_dim = 0;
};

std::vector<SummandDims> summand_dims(const Matrix& g, const BlockShape& shape);

// Witness a^{i,j} = e^{i,j} + sum_{l=j+1..i} x_l e^{i,l}: the matrix of the
// projector built on the mixed basis {b^{-1}e_1..b^{-1}e_{j-1}, e_j,
// b^{-1}e_{j+1}..b^{-1}e_i, e_{i+1}..e_n}, sending the e_j slot to e_i.
struct FernWitness {
  int i = 0, j = 0;
  Permutation u;                     // block transposition used
  std::vector<Rational> x;           // coefficients x_{i,l}, l = j+1..i
  Matrix witness;                    // a^{i,j}
  bool member = false;               // lies in Ad_{b^{-1} u#}(p_{S0})
};

FernWitness fern_witness(int i, int j, const Matrix& b, const BlockShape& shape);

struct FernCheck {
  std::vector<FernWitness> witnesses;
  bool all_members = false;
  bool spans = false;  // witnesses + (Ad_{b^{-1}}(b_upper) ∩ lower Borel) fill the lower Borel
};

FernCheck fern_check(const Matrix& b, const BlockShape& shape);

}  // namespace fernlab::lie
