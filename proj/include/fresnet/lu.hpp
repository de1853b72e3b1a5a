#pragma once

// Dense LU factorization with partial pivoting for small square systems.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fresnet/errors.hpp"

namespace fresnet {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::vector<T> operator*(std::span<const T> x) const {
    std::vector<T> y(rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  /// max column sum of |a_ij|
  double norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
class LuDecomposition {
 public:
  explicit LuDecomposition(DenseMatrix<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw DomainError("LU needs a square matrix");
    const double anorm = lu_.norm1();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          p = i;
        }
      }
      if (best == 0.0) throw SolverError("matrix is singular", std::numeric_limits<double>::infinity());
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        std::swap(perm_[k], perm_[p]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const T f = lu_(i, k) / lu_(k, k);
        lu_(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }

    // n <= a few dozen here, so the explicit inverse gives an exact 1-norm condition number.
    DenseMatrix<T> inv(n, n);
    std::vector<T> e(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(e.begin(), e.end(), T{});
      e[j] = T{1};
      const auto col = solve(e);
      for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    condition_ = anorm * inv.norm1();
    if (!std::isfinite(condition_) || condition_ > 1.0 / std::numeric_limits<double>::epsilon())
      throw SolverError("matrix is numerically singular", condition_);
  }

  std::size_t size() const noexcept { return lu_.rows(); }
  double condition() const noexcept { return condition_; }

  std::vector<T> solve(std::span<const T> b) const {
    const std::size_t n = lu_.rows();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      T s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      T s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

 private:
  DenseMatrix<T> lu_;
  std::vector<std::size_t> perm_;
  double condition_ = 0.0;
};

}  // namespace fresnet
