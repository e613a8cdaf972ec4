#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fernlab/rational.hpp"

namespace fernlab {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  // Exact inverse via Gauss-Jordan; throws Error(Singular) when not invertible.
  Matrix inverse() const;
  bool is_invertible() const;
  bool is_upper_triangular() const;
  bool is_unit_upper_triangular() const;

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

// In-place reduced row echelon form. Returns pivot column indices; zero rows
// are moved to the bottom and trimmed from the logical rank but kept in the
// matrix object (callers that want the trimmed form use rref()).
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

// Rank of m (exact).
std::size_t rank(const Matrix& m);

// Permutation matrix P with P e_j = e_{w(j)}, for one-line images w (1-based).
Matrix permutation_matrix(const std::vector<int>& one_line);

}  // namespace fernlab
