#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "gsp4/scalar.hpp"

namespace gsp4 {

// Defers to the element type's is_zero overload via argument lookup at the
// point of instantiation, so element types may be declared after this header.
template <typename R>
bool elem_is_zero(const R& x) {
  return is_zero(x);
}

// Dense matrix over an exact field (Scalar, RatFun, ...). The element type
// needs ring arithmetic, division, == and a free is_zero(). All elimination
// is fraction-free in spirit only; entries stay exact because the field is.
template <typename R>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R()) {}
  Mat(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t k = 0; k < n; ++k) m(k, k) = R(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  R& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!elem_is_zero(x)) return false;
    }
    return true;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    x.check_same_shape(y);
    Mat r = x;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) { return x + (-y); }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i) {
      for (size_t k = 0; k < x.cols_; ++k) {
        if (elem_is_zero(x(i, k))) continue;
        for (size_t j = 0; j < y.cols_; ++j) {
          r(i, j) = r(i, j) + x(i, k) * y(k, j);
        }
      }
    }
    return r;
  }

  friend Mat operator*(const R& c, const Mat& m) {
    Mat r = m;
    for (auto& x : r.a_) x = c * x;
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (size_t k = 0; k < x.a_.size(); ++k) {
      if (!(x.a_[k] == y.a_[k])) return false;
    }
    return true;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  R trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: trace of non-square");
    R t{};
    for (size_t k = 0; k < rows_; ++k) t = t + (*this)(k, k);
    return t;
  }

  // Reduced row echelon form; returns the pivot columns.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t p = row;
      while (p < rows_ && elem_is_zero((*this)(p, col))) ++p;
      if (p == rows_) continue;
      swap_rows(p, row);
      R inv = R(1) / (*this)(row, col);
      for (size_t j = col; j < cols_; ++j) (*this)(row, j) = inv * (*this)(row, j);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row || elem_is_zero((*this)(i, col))) continue;
        R f = (*this)(i, col);
        for (size_t j = col; j < cols_; ++j) {
          (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Mat m = *this;
    return m.rref().size();
  }

  // Basis of the right null space, one vector per free column.
  std::vector<std::vector<R>> nullspace() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<R>> basis;
    for (size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<R> v(cols_, R());
      v[free] = R(1);
      for (size_t k = 0; k < pivots.size(); ++k) {
        v[pivots[k]] = -m(k, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of A x = b, if consistent.
  std::optional<std::vector<R>> solve(const std::vector<R>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("Mat: rhs size mismatch");
    Mat aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<R> x(cols_, R());
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
    return x;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = R(1);
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t k = 0; k < pivots.size(); ++k) {
      if (pivots[k] != k) return std::nullopt;
    }
    Mat inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    }
    return inv;
  }

  R det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square");
    Mat m = *this;
    R d = R(1);
    for (size_t col = 0; col < cols_; ++col) {
      size_t p = col;
      while (p < rows_ && elem_is_zero(m(p, col))) ++p;
      if (p == rows_) return R();
      if (p != col) {
        m.swap_rows(p, col);
        d = -d;
      }
      d = d * m(col, col);
      R inv = R(1) / m(col, col);
      for (size_t i = col + 1; i < rows_; ++i) {
        if (elem_is_zero(m(i, col))) continue;
        R f = inv * m(i, col);
        for (size_t j = col; j < cols_; ++j) m(i, j) = m(i, j) - f * m(col, j);
      }
    }
    return d;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (size_t i = 0; i < m.rows_; ++i) {
      os << "[";
      for (size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ", ";
        os << m(i, j);
      }
      os << "]\n";
    }
    return os;
  }

private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("Mat: shape mismatch");
    }
  }
  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  size_t rows_, cols_;
  std::vector<R> a_;
};

template <typename R>
std::vector<R> mat_apply(const Mat<R>& m, const std::vector<R>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_apply: size mismatch");
  std::vector<R> out(m.rows(), R());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) out[i] = out[i] + m(i, j) * v[j];
  }
  return out;
}

}  // namespace gsp4
