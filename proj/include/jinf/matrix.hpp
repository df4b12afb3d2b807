#ifndef JINF_MATRIX_HPP
#define JINF_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jinf/numeric.hpp"

namespace jinf {

/// Field operations used by the elimination routines. Specialised for
/// Rational here and for Padic in padic.hpp.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational>
{
  static bool is_zero(Rational const &x) { return x == 0; }
  static Rational zero_like(Rational const &) { return 0; }
  static Rational one_like(Rational const &) { return 1; }
  /// Whether a is a strictly better pivot than b.
  static bool better_pivot(Rational const &, Rational const &) { return false; }
};

/// Dense row-major matrix.
template <class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T const &fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, T{}) {}

  static Matrix identity(std::size_t n, T const &like)
  {
    Matrix m(n, n, ScalarTraits<T>::zero_like(like));
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = ScalarTraits<T>::one_like(like);
    return m;
  }
  static Matrix from_rows(std::vector<std::vector<T>> const &rows)
  {
    if (rows.empty())
      return {};
    Matrix m(rows.size(), rows.front().size(), rows.front().empty() ? T{} : rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_)
        throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.c_; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  T const &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::vector<T> const &data() const { return a_; }

  std::vector<T> row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
  std::vector<T> col(std::size_t j) const
  {
    std::vector<T> v;
    for (std::size_t i = 0; i < r_; ++i)
      v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const
  {
    Matrix t(c_, r_, a_.empty() ? T{} : a_.front());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(Matrix const &o) const
  {
    if (c_ != o.r_)
      throw std::invalid_argument("matrix product: dimension mismatch");
    T z = ScalarTraits<T>::zero_like(!a_.empty() ? a_.front() : (!o.a_.empty() ? o.a_.front() : T{}));
    Matrix m(r_, o.c_, z);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        T const &x = (*this)(i, k);
        if (ScalarTraits<T>::is_zero(x))
          continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          m(i, j) += x * o(k, j);
      }
    return m;
  }
  std::vector<T> operator*(std::vector<T> const &v) const
  {
    if (v.size() != c_)
      throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<T> out(r_, ScalarTraits<T>::zero_like(v.empty() ? T{} : v.front()));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k)
        out[i] += (*this)(i, k) * v[k];
    return out;
  }
  Matrix operator+(Matrix const &o) const
  {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
      m.a_[i] += o.a_[i];
    return m;
  }
  Matrix operator-(Matrix const &o) const
  {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
      m.a_[i] -= o.a_[i];
    return m;
  }
  Matrix scaled(T const &s) const
  {
    Matrix m = *this;
    for (auto &x : m.a_)
      x *= s;
    return m;
  }
  /// Entrywise zero test (exact for Rational, to known precision for Padic).
  bool is_zero() const
  {
    for (auto const &x : a_)
      if (!ScalarTraits<T>::is_zero(x))
        return false;
    return true;
  }
  bool equals(Matrix const &o) const { return r_ == o.r_ && c_ == o.c_ && (*this - o).is_zero(); }

private:
  void check_same(Matrix const &o) const
  {
    if (r_ != o.r_ || c_ != o.c_)
      throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

template <class T>
bool operator==(Matrix<T> const &a, Matrix<T> const &b)
{
  return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

using RatMat = Matrix<Rational>;
using RatVec = std::vector<Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T> &m)
{
  using S = ScalarTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t i = row; i < m.rows(); ++i)
      if (!S::is_zero(m(i, col)) && (!best || S::better_pivot(m(i, col), m(*best, col))))
        best = i;
    if (!best)
      continue;
    if (*best != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(row, j), m(*best, j));
    T inv = S::one_like(m(row, col)) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || S::is_zero(m(i, col)))
        continue;
      T f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
  return rref(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m)
{
  using S = ScalarTraits<T>;
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv)
    is_pivot[c] = true;
  T like = m.rows() && m.cols() ? m(0, 0) : T{};
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    std::vector<T> v(m.cols(), S::zero_like(like));
    v[f] = S::one_like(like);
    for (std::size_t k = 0; k < piv.size(); ++k)
      v[piv[k]] = -m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose rows are the given vectors.
template <class T>
Matrix<T> rows_matrix(std::vector<std::vector<T>> const &rows, std::size_t cols, T const &like)
{
  Matrix<T> m(rows.size(), cols, ScalarTraits<T>::zero_like(like));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  return m;
}

/// Echelon basis (as rows) of the span of the given vectors.
template <class T>
std::vector<std::vector<T>> span_basis(std::vector<std::vector<T>> const &vs, std::size_t dim, T const &like)
{
  auto m = rows_matrix(vs, dim, like);
  auto piv = rref(m);
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < piv.size(); ++i)
    out.push_back(m.row(i));
  return out;
}

template <class T>
std::optional<Matrix<T>> inverse(Matrix<T> const &m)
{
  using S = ScalarTraits<T>;
  if (!m.square())
    throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0)
    return m;
  Matrix<T> aug(n, 2 * n, S::zero_like(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = S::one_like(m(0, 0));
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1)
    return std::nullopt;
  Matrix<T> inv(n, n, S::zero_like(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
T determinant(Matrix<T> m)
{
  using S = ScalarTraits<T>;
  if (!m.square())
    throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0)
    throw std::invalid_argument("determinant of an empty matrix");
  T det = S::one_like(m(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> best;
    for (std::size_t i = col; i < n; ++i)
      if (!S::is_zero(m(i, col)) && (!best || S::better_pivot(m(i, col), m(*best, col))))
        best = i;
    if (!best)
      return S::zero_like(m(0, 0));
    if (*best != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(col, j), m(*best, j));
      det = -det;
    }
    det *= m(col, col);
    T inv = S::one_like(m(0, 0)) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (S::is_zero(m(i, col)))
        continue;
      T f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Coordinates of v in the span of the basis rows, if v lies in it.
template <class T>
std::optional<std::vector<T>> coordinates(std::vector<std::vector<T>> const &basis, std::vector<T> const &v)
{
  using S = ScalarTraits<T>;
  std::size_t k = basis.size(), n = v.size();
  if (k == 0)
  {
    for (auto const &x : v)
      if (!S::is_zero(x))
        return std::nullopt;
    return std::vector<T>{};
  }
  // columns: basis vectors, then v
  Matrix<T> m(n, k + 1, S::zero_like(v.front()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      m(i, j) = basis[j][i];
    m(i, k) = v[i];
  }
  auto piv = rref(m);
  if (!piv.empty() && piv.back() == k)
    return std::nullopt;
  if (piv.size() < k)
    throw std::invalid_argument("coordinates: basis is linearly dependent");
  std::vector<T> c(k, S::zero_like(v.front()));
  for (std::size_t i = 0; i < k; ++i)
    c[i] = m(i, k);
  return c;
}

std::string to_string(RatMat const &m);

} // namespace jinf

#endif
