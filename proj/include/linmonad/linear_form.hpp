#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linmonad/field.hpp"
#include "linmonad/matrix.hpp"
#include "linmonad/monomial.hpp"
#include "linmonad/polynomial.hpp"

namespace linmonad {

/// Homogeneous degree-1 form: coefficient of x_i at index i.
template <Field K>
class LinearForm {
 public:
  LinearForm(int nvars, FieldInfo<K> field)
      : field_(field), c_(nvars, FieldTraits<K>::zero(field)) {}
  LinearForm(std::vector<K> coeffs, FieldInfo<K> field)
      : field_(field), c_(std::move(coeffs)) {}

  int nvars() const { return static_cast<int>(c_.size()); }
  FieldInfo<K> field() const { return field_; }
  const K& operator[](int i) const { return c_[i]; }
  K& operator[](int i) { return c_[i]; }

  bool is_zero() const {
    for (const K& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const LinearForm& o) const { return c_ == o.c_; }

  LinearForm operator+(const LinearForm& o) const {
    assert(nvars() == o.nvars());
    LinearForm r(*this);
    for (int i = 0; i < nvars(); ++i) r.c_[i] += o.c_[i];
    return r;
  }

  LinearForm operator*(const K& s) const {
    LinearForm r(*this);
    for (K& x : r.c_) x = x * s;
    return r;
  }

  /// Sets x_var = 0 and removes the variable, shifting later ones down.
  LinearForm substitute_zero(int var) const {
    std::vector<K> out;
    out.reserve(c_.size() - 1);
    for (int i = 0; i < nvars(); ++i)
      if (i != var) out.push_back(c_[i]);
    return LinearForm(std::move(out), field_);
  }

  Polynomial<K> to_polynomial(MonomialOrder order = MonomialOrder::Grevlex) const {
    std::vector<typename Polynomial<K>::Term> terms;
    for (int i = 0; i < nvars(); ++i)
      if (!c_[i].is_zero()) terms.emplace_back(Monomial::variable(i, nvars()), c_[i]);
    return Polynomial<K>(std::move(terms), nvars(), field_, order);
  }

  std::string str(const std::string& base = "x") const { return to_polynomial().str(base); }

 private:
  FieldInfo<K> field_;
  std::vector<K> c_;
};

/// Matrix of linear forms on P^n (the alpha and beta of a monad).
template <Field K>
class LinearFormMatrix {
 public:
  LinearFormMatrix(std::size_t rows, std::size_t cols, int n, FieldInfo<K> field)
      : rows_(rows), cols_(cols), n_(n), field_(field),
        e_(rows * cols, LinearForm<K>(n + 1, field)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int n() const { return n_; }
  int nvars() const { return n_ + 1; }
  FieldInfo<K> field() const { return field_; }

  LinearForm<K>& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }
  const LinearForm<K>& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return e_[i * cols_ + j];
  }

  bool operator==(const LinearFormMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && n_ == o.n_ && e_ == o.e_;
  }

  LinearFormMatrix transpose() const {
    LinearFormMatrix t(cols_, rows_, n_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  LinearFormMatrix substitute_zero(int var) const {
    if (n_ < 1) throw std::invalid_argument("LinearFormMatrix: cannot drop the last variable");
    LinearFormMatrix r(rows_, cols_, n_ - 1, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r(i, j) = (*this)(i, j).substitute_zero(var);
    return r;
  }

  static LinearFormMatrix block_diag(const LinearFormMatrix& a, const LinearFormMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("LinearFormMatrix: ambient dimension mismatch");
    LinearFormMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.n_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
  }

 private:
  std::size_t rows_, cols_;
  int n_;
  FieldInfo<K> field_;
  std::vector<LinearForm<K>> e_;
};

/// Entry (i,j) of outer.inner as a quadratic form; zero for a valid complex.
template <Field K>
Polynomial<K> composition_entry(const LinearFormMatrix<K>& outer,
                                const LinearFormMatrix<K>& inner,
                                std::size_t i, std::size_t j) {
  assert(outer.cols() == inner.rows());
  Polynomial<K> acc(outer.nvars(), outer.field());
  for (std::size_t k = 0; k < outer.cols(); ++k)
    acc = acc + outer(i, k).to_polynomial() * inner(k, j).to_polynomial();
  return acc;
}

template <Field K>
bool composition_is_zero(const LinearFormMatrix<K>& outer, const LinearFormMatrix<K>& inner) {
  for (std::size_t i = 0; i < outer.rows(); ++i)
    for (std::size_t j = 0; j < inner.cols(); ++j)
      if (!composition_entry(outer, inner, i, j).is_zero()) return false;
  return true;
}

/// Scalar matrix of the induced map (+)_cols S_k -> (+)_rows S_{k+1}, where
/// entry (i,j) acts by multiplication and every graded piece carries its fixed
/// descending-grevlex monomial basis. Block (i,j) sits at row offset
/// i*dim S_{k+1}, column offset j*dim S_k.
template <Field K>
Matrix<K> multiply_matrix(const LinearFormMatrix<K>& M, int k) {
  const int nv = M.nvars();
  std::vector<Monomial> src = section_basis(nv, k);
  BasisIndex dst(section_basis(nv, k + 1));
  const std::size_t s = src.size(), t = dst.size();
  Matrix<K> out(M.rows() * t, M.cols() * s, M.field());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const LinearForm<K>& f = M(i, j);
      if (f.is_zero()) continue;
      for (std::size_t c0 = 0; c0 < s; ++c0)
        for (int l = 0; l < nv; ++l) {
          if (f[l].is_zero()) continue;
          std::size_t r0 = dst.find(src[c0] * Monomial::variable(l, nv));
          assert(r0 < t);
          out(i * t + r0, j * s + c0) += f[l];
        }
    }
  return out;
}

/// Same induced map on top cohomology: multiplication by x_l shifts a Serre
/// monomial x^a to x^{a+e_l}, killing it when a_l = -1. Computed on the dual
/// (complement) monomials, where x_l acts by subtracting e_l.
template <Field K>
Matrix<K> serre_multiply_matrix(const LinearFormMatrix<K>& M, int m) {
  const int nv = M.nvars();
  std::vector<Monomial> src_dual = section_basis(nv, -m - nv);
  BasisIndex dst_dual(section_basis(nv, -(m + 1) - nv));
  const std::size_t s = src_dual.size(), t = dst_dual.size();
  Matrix<K> out(M.rows() * t, M.cols() * s, M.field());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const LinearForm<K>& f = M(i, j);
      if (f.is_zero()) continue;
      for (std::size_t c0 = 0; c0 < s; ++c0)
        for (int l = 0; l < nv; ++l) {
          if (f[l].is_zero()) continue;
          if (src_dual[c0].exponent(l) == 0) continue;  // lands outside the Serre basis
          std::size_t r0 = dst_dual.find(src_dual[c0] / Monomial::variable(l, nv));
          assert(r0 < t);
          out(i * t + r0, j * s + c0) += f[l];
        }
    }
  return out;
}

inline std::vector<std::vector<int>> index_subsets(int count, int choose) {
  std::vector<std::vector<int>> out;
  if (choose < 0 || choose > count) return out;
  std::vector<int> cur(choose);
  auto rec = [&](auto&& self, int start, int pos) -> void {
    if (pos == choose) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= count - (choose - pos); ++i) {
      cur[pos] = i;
      self(self, i + 1, pos + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Determinant of the submatrix picked by `rs` x `cs`: cofactor expansion with
/// memoization on column subsets.
template <Field K>
Polynomial<K> minor_det(const LinearFormMatrix<K>& M, const std::vector<int>& rs,
                        const std::vector<int>& cs) {
  assert(rs.size() == cs.size());
  const int size = static_cast<int>(rs.size());
  const int nv = M.nvars();
  const K one = FieldTraits<K>::one(M.field());
  std::unordered_map<unsigned, Polynomial<K>> memo;
  auto det = [&](auto&& self, unsigned mask) -> const Polynomial<K>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial<K> acc(nv, M.field());
    if (mask == 0) {
      acc = Polynomial<K>::from_monomial(Monomial(nv), one, M.field());
    } else {
      int level = size - __builtin_popcount(mask);
      int sign = 0;
      for (int b = 0; b < size; ++b) {
        if (!(mask & (1u << b))) continue;
        const Polynomial<K> entry = M(rs[level], cs[b]).to_polynomial();
        if (!entry.is_zero()) {
          Polynomial<K> sub = entry * self(self, mask & ~(1u << b));
          acc = (sign % 2 == 0) ? acc + sub : acc - sub;
        }
        ++sign;
      }
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  return det(det, size == 0 ? 0u : (1u << size) - 1u);
}

/// All size x size minors as homogeneous degree-`size` polynomials, ordered
/// lexicographically by (row subset, column subset).
template <Field K>
std::vector<Polynomial<K>> minors(const LinearFormMatrix<K>& M, int size) {
  if (size < 0 || size > static_cast<int>(std::min(M.rows(), M.cols())))
    throw std::invalid_argument("minors: size exceeds matrix dimensions");
  auto row_sets = index_subsets(static_cast<int>(M.rows()), size);
  auto col_sets = index_subsets(static_cast<int>(M.cols()), size);
  std::vector<Polynomial<K>> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(minor_det(M, rs, cs));
  return out;
}

/// True when some size x size minor is a nonzero polynomial; stops early.
template <Field K>
bool has_nonzero_minor(const LinearFormMatrix<K>& M, int size) {
  if (size < 0 || size > static_cast<int>(std::min(M.rows(), M.cols()))) return false;
  for (const auto& rs : index_subsets(static_cast<int>(M.rows()), size))
    for (const auto& cs : index_subsets(static_cast<int>(M.cols()), size))
      if (!minor_det(M, rs, cs).is_zero()) return true;
  return false;
}

}  // namespace linmonad
