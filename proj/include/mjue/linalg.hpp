#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mjue {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
double trace(const Matrix& a);

/// Determinant by LU factorization with partial pivoting.
double determinant(Matrix a);

/// Eigenvalues (ascending) of a symmetric tridiagonal matrix and the first
/// component of each normalized eigenvector.
struct TridiagonalEigen {
  std::vector<double> values;
  std::vector<double> first_components;
};

/// Implicit-shift QL iteration. `offdiag` has diag.size()-1 entries.
/// Only the first row of the eigenvector matrix is accumulated, so the cost
/// is O(n^2).
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag,
                                             std::span<const double> offdiag);

}  // namespace mjue
