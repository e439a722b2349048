#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "exotic/prime_field.hpp"

namespace exotic {

using Vec = std::vector<std::uint64_t>;

/// Dense matrix over a prime field, row-major.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw error(errc::dimension_mismatch, "ragged row list");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix row_vector(PrimeField field, const Vec& v) {
    Matrix m(field, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
  }

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

  void set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw error(errc::dimension_mismatch, "row length");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  bool is_zero() const {
    for (auto x : a_)
      if (x) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = field_.add(a_[k], o.a_[k]);
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = field_.sub(a_[k], o.a_[k]);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw error(errc::dimension_mismatch, "matrix product shapes");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          m(i, j) = field_.add(m(i, j), field_.mul(x, o(k, j)));
      }
    return m;
  }

  Matrix scaled(std::uint64_t c) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = field_.mul(a_[k], c);
    return m;
  }

  Matrix transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw error(errc::dimension_mismatch, "matrix-vector shapes");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
      out[i] = acc;
    }
    return out;
  }

  /// x^0, x^1, ..., x^k for a square matrix.
  std::vector<Matrix> powers(std::size_t k) const {
    if (!is_square()) throw error(errc::dimension_mismatch, "powers of a non-square matrix");
    std::vector<Matrix> out;
    out.reserve(k + 1);
    out.push_back(identity(field_, rows_));
    for (std::size_t i = 1; i <= k; ++i) out.push_back(out.back() * *this);
    return out;
  }

  /// Stack rows of `a` on top of rows of `b`.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ || !(a.field_ == b.field_))
      throw error(errc::dimension_mismatch, "vstack shapes");
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
    return m;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && (*this)(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
      std::uint64_t invp = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), invp);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        std::uint64_t f = (*this)(i, c);
        if (f == 0) continue;
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.reduce().size();
  }

  /// Basis of the right kernel {x : Ax = 0}, one vector per row, canonical
  /// (reduced echelon) form. Zero rows for a full-rank square matrix.
  Matrix kernel() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix k(field_, cols_ - pivots.size(), cols_);
    std::size_t out = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      k(out, c) = 1;
      for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        k(out, pivots[pi]) = field_.neg(m(pi, c));
      ++out;
    }
    k.reduce();
    return k;
  }

  Matrix inverse() const {
    if (!is_square()) throw error(errc::dimension_mismatch, "inverse of a non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = 1;
    }
    auto pivots = aug.reduce();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
      throw error(errc::singular_matrix, "matrix is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  static Matrix random(PrimeField field, std::size_t rows, std::size_t cols, SplitMix64& rng) {
    Matrix m(field, rows, cols);
    for (auto& x : m.a_) x = field.sample(rng);
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
      throw error(errc::dimension_mismatch, "matrix shapes differ");
  }

  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

inline Vec random_vec(PrimeField field, std::size_t n, SplitMix64& rng) {
  Vec v(n);
  for (auto& x : v) x = field.sample(rng);
  return v;
}

inline Vec add(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

inline Vec scale(const PrimeField& f, std::uint64_t c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

inline bool is_zero_vec(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

/// Bilinear form a^T G b.
inline std::uint64_t form_value(const Matrix& gram, const Vec& a, const Vec& b) {
  const PrimeField& f = gram.field();
  Vec gb = gram.apply(b);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], gb[i]));
  return acc;
}

}  // namespace exotic
