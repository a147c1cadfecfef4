#pragma once

#include <optional>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Matrix transposed() const;
  Vector operator*(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing each row's
/// denominators, so every intermediate value is an integer.
std::size_t rank(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

RowEchelon rref(Matrix m);

/// A solution of a x = b with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis of {x : a x = 0}, one vector per free column in increasing order,
/// with that free variable equal to 1 and the other free variables 0.
std::vector<Vector> nullspace(const Matrix& a);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace cobord
