#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deformkit/rational.hpp"

namespace dk {

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with pivot columns, ordered left to right.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(Matrix m);

struct SolveResult {
  std::size_t rank = 0;
  /// One vector per free column, in increasing column order; each has a 1 in
  /// its free column and zeros in the other free columns.
  std::vector<Vector> kernel_basis;
};

/// Rank and canonical kernel basis. Empty matrices give rank 0.
SolveResult solve(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical particular solution of m x = b (free variables set to zero),
/// or nullopt when b is outside the column space.
std::optional<Vector> solve_particular(const Matrix& m, const Vector& b);

/// Reduces vectors modulo a fixed subspace to a canonical remainder: the
/// coordinates at the subspace's echelon pivots are cleared.
class SubspaceReducer {
 public:
  SubspaceReducer(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  std::size_t dimension() const noexcept { return echelon_.pivots.size(); }
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return dk::is_zero(reduce(v)); }

 private:
  std::size_t ambient_ = 0;
  EchelonForm echelon_;
};

}  // namespace dk
