#include "deformkit/matrix.hpp"

#include <cassert>
#include <utility>

#include "deformkit/error.hpp"

namespace dk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorCode::InvalidInput, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const { return dk::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  assert(v.size() == cols_);
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::InvalidInput, "matrix shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm rref(Matrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && sgn(m(r, c)) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
    Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == pivot_row || sgn(m(rr, c)) == 0) continue;
      Rational factor = m(rr, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(pivot_row, k)) != 0) m(rr, k) -= factor * m(pivot_row, k);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

SolveResult solve(const Matrix& m) {
  EchelonForm e = rref(m);
  SolveResult out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve_particular(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::InvalidInput, "rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  EchelonForm e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

SubspaceReducer::SubspaceReducer(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_(ambient_dim) {
  Matrix rows(spanning.size(), ambient_dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != ambient_dim)
      throw Error(ErrorCode::InvalidInput, "spanning vector length mismatch");
    for (std::size_t c = 0; c < ambient_dim; ++c) rows(r, c) = spanning[r][c];
  }
  echelon_ = rref(std::move(rows));
}

Vector SubspaceReducer::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::InvalidInput, "vector length mismatch");
  for (std::size_t r = 0; r < echelon_.pivots.size(); ++r) {
    std::size_t p = echelon_.pivots[r];
    if (sgn(v[p]) == 0) continue;
    Rational factor = v[p];
    for (std::size_t c = p; c < ambient_; ++c)
      if (sgn(echelon_.reduced(r, c)) != 0) v[c] -= factor * echelon_.reduced(r, c);
  }
  return v;
}

}  // namespace dk
