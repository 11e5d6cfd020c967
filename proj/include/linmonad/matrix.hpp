#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linmonad/field.hpp"

namespace linmonad {

/// Dense matrix over an exact field. Immutable in spirit: analysis routines
/// work on copies and the originals never change under rank/kernel calls.
template <Field K>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, FieldInfo<K> field)
      : rows_(rows), cols_(cols), field_(field),
        a_(rows * cols, FieldTraits<K>::zero(field)) {}

  static Matrix identity(std::size_t n, FieldInfo<K> field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldTraits<K>::one(field);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows, FieldInfo<K> field) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldInfo<K> field() const { return field_; }

  K& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }
  const K& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const K& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<K> r(rows_, FieldTraits<K>::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  /// Rank by exact elimination (fraction-free over Q, plain Gauss over F_p).
  std::size_t rank() const {
    Matrix work(*this);
    return work.forward_eliminate();
  }

  struct Echelon {
    Matrix<K> m;
    std::vector<std::size_t> pivot_cols;
  };

  /// Reduced row echelon form with pivot column profile.
  Echelon rref() const {
    Matrix work(*this);
    work.forward_eliminate();
    // normalize pivots and clear above
    std::size_t r = work.pivots_.size();
    for (std::size_t t = r; t-- > 0;) {
      std::size_t c = work.pivots_[t];
      K inv = FieldTraits<K>::one(field_) / work(t, c);
      for (std::size_t j = c; j < cols_; ++j) work(t, j) = work(t, j) * inv;
      for (std::size_t i = 0; i < t; ++i) {
        K f = work(i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols_; ++j) work(i, j) -= f * work(t, j);
      }
    }
    return {work, work.pivots_};
  }

  /// Basis of the right null space; size is cols() - rank(), every vector is
  /// annihilated exactly.
  std::vector<std::vector<K>> kernel_basis() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, FieldTraits<K>::zero(field_));
      v[f] = FieldTraits<K>::one(field_);
      for (std::size_t t = 0; t < e.pivot_cols.size(); ++t)
        v[e.pivot_cols[t]] = -e.m(t, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  // In-place row echelon reduction; returns the rank, records pivot columns.
  std::size_t forward_eliminate() {
    pivots_.clear();
    if constexpr (FieldTraits<K>::fraction_free) {
      clear_denominators();
      return bareiss();
    } else {
      return gauss();
    }
  }

  // Row scaling by nonzero constants preserves rank and right kernel.
  void clear_denominators() {
    for (std::size_t i = 0; i < rows_; ++i) {
      K scale = FieldTraits<K>::one(field_);
      for (std::size_t j = 0; j < cols_; ++j) {
        K scaled = (*this)(i, j) * scale;
        if (!scaled.is_integer()) scale = scale * scaled.denominator();
      }
      if (!(scale == FieldTraits<K>::one(field_)))
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= scale;
    }
  }

  std::size_t bareiss() {
    K prev = FieldTraits<K>::one(field_);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && (*this)(pr, c).is_zero()) ++pr;
      if (pr == rows_) continue;
      swap_rows(r, pr);
      const K pivot = (*this)(r, c);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const K head = (*this)(i, c);
        for (std::size_t j = c + 1; j < cols_; ++j)
          (*this)(i, j) = (pivot * (*this)(i, j) - head * (*this)(r, j)) / prev;
        (*this)(i, c) = FieldTraits<K>::zero(field_);
      }
      prev = pivot;
      pivots_.push_back(c);
      ++r;
    }
    return r;
  }

  std::size_t gauss() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && (*this)(pr, c).is_zero()) ++pr;
      if (pr == rows_) continue;
      swap_rows(r, pr);
      const K inv = FieldTraits<K>::one(field_) / (*this)(r, c);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const K f = (*this)(i, c) * inv;
        if (f.is_zero()) continue;
        for (std::size_t j = c + 1; j < cols_; ++j)
          (*this)(i, j) -= f * (*this)(r, j);
        (*this)(i, c) = FieldTraits<K>::zero(field_);
      }
      pivots_.push_back(c);
      ++r;
    }
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  std::size_t rows_, cols_;
  FieldInfo<K> field_;
  std::vector<K> a_;
  std::vector<std::size_t> pivots_;
};

}  // namespace linmonad
