#include "fernlab/matrix.hpp"

#include "fernlab/errors.hpp"

namespace fernlab {

Matrix::Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged initializer");
    for (auto v : r) e_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix r(rows_, o.cols_);
  Rational scratch;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j).addmul(a, o.at(k, j), scratch);
      }
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

namespace {

// Gauss-Jordan on a mutable grid; returns pivot columns. Rows end up in
// reduced echelon order with zero rows at the bottom.
std::vector<std::size_t> reduce(std::vector<Rational>& e, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Rational scratch;
  std::size_t r = 0;
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return e[i * cols + j]; };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    if (!at(r, c).is_one()) {
      Rational inv = at(r, c).inverse();
      at(r, c) = Rational(1);
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!at(r, j).is_zero()) at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Rational f = at(i, c);
      at(i, c) = Rational(0);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (at(r, j).is_zero()) continue;
        at(i, j).submul(f, at(r, j), scratch);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
  std::vector<Rational> grid(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) grid[i * m.cols() + j] = m.at(i, j);
  auto pivots = reduce(grid, m.rows(), m.cols());
  Matrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = grid[i * m.cols() + j];
  return {out, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::Singular, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  auto [red, pivots] = rref(aug);
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    fail(ErrorKind::Singular, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

bool Matrix::is_invertible() const {
  if (rows_ != cols_) return false;
  return rank(*this) == rows_;
}

bool Matrix::is_upper_triangular() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_unit_upper_triangular() const {
  if (!is_upper_triangular()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!at(i, i).is_one()) return false;
  return true;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  std::vector<Rational> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Rational> Matrix::col(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Matrix permutation_matrix(const std::vector<int>& one_line) {
  const std::size_t n = one_line.size();
  Matrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p.at(static_cast<std::size_t>(one_line[j]) - 1, j) = Rational(1);
  return p;
}

}  // namespace fernlab
