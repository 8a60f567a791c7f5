#pragma once

#include <cstddef>
#include <vector>

#include "cforge/error.hpp"

namespace cforge {

/// Dense row-major matrix over a field F. Exact arithmetic only.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = field_.add(r.data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = field_.sub(r.data_[i], o.data_[i]);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw Error(ErrorCode::ArityMismatch, "matrix dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }
  Matrix scaled(const Elem& c) const {
    Matrix r = *this;
    for (auto& v : r.data_) v = field_.mul(v, c);
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// Incrementally maintained row-echelon span of vectors of a fixed
/// length. insert() reduces against the current basis and reports
/// whether the span grew.
template <class F>
class EchelonSpan {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  EchelonSpan(F field, std::size_t len) : field_(field), len_(len) {}

  std::size_t dim() const { return rows_.size(); }

  /// Reduces v against the basis in place; returns the residue.
  Vec reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem& lead = v[pivots_[r]];
      if (field_.is_zero(lead)) continue;
      Elem factor = lead;  // basis rows are pivot-monic
      for (std::size_t j = 0; j < len_; ++j)
        v[j] = field_.sub(v[j], field_.mul(factor, rows_[r][j]));
    }
    return v;
  }

  bool insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = len_;
    for (std::size_t j = 0; j < len_; ++j)
      if (!field_.is_zero(v[j])) {
        piv = j;
        break;
      }
    if (piv == len_) return false;
    Elem inv = field_.inv(v[piv]);
    for (auto& x : v) x = field_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  F field_;
  std::size_t len_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; returns the rank.
template <class F>
std::size_t rref(Matrix<F>& m) {
  const F& field = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && field.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      std::swap(m.at(rank, j), m.at(piv, j));
    typename F::Elem inv = field.inv(m.at(rank, col));
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(rank, j) = field.mul(m.at(rank, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || field.is_zero(m.at(i, col))) continue;
      typename F::Elem f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = field.sub(m.at(i, j), field.mul(f, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

/// Basis of the right nullspace {v : M v = 0}, one vector per free
/// column of the RREF.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(Matrix<F> m) {
  const F field = m.field();
  std::size_t rank = rref(m);
  std::size_t ncols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t r = 0, c = 0; r < rank; ++r) {
    while (c < ncols && field.is_zero(m.at(r, c))) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(ncols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = field.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cforge
