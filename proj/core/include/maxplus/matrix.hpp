#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "maxplus/value.hpp"

namespace maxplus {

/// A map from states to R ∪ {-inf}, indexed like the owning kernel.
using MaxPlusFunction = std::vector<Value>;

/// Dense square matrix over the max-plus semiring, row-major.
class Matrix {
 public:
  Matrix() = default;
  /// n x n filled with `fill` (default -inf, the zero matrix).
  explicit Matrix(std::size_t n, Value fill = kNegInf) : n_(n), a_(n * n, fill) {}
  /// Row list; rows must all have the outer length.
  Matrix(std::initializer_list<std::initializer_list<Value>> rows);

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Value& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  Value operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

  std::span<const Value> row(std::size_t i) const noexcept { return {a_.data() + i * n_, n_}; }
  std::span<const Value> data() const noexcept { return a_; }

  bool all_finite() const noexcept;
  bool has_neg_inf() const noexcept;
  /// True when every finite entry is an integer.
  bool is_integer_valued() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Value> a_;
};

/// Entrywise max.
Matrix oplus(const Matrix& a, const Matrix& b);
/// Max-plus product: (AB)(i,j) = max_k A(i,k) + B(k,j).
Matrix otimes(const Matrix& a, const Matrix& b);
/// A^t by repeated squaring; A^0 is the identity.
Matrix power(const Matrix& a, std::size_t t);
/// (Ag)(x) = max_y A(x,y) + g(y). Throws DimensionMismatch.
MaxPlusFunction apply(const Matrix& a, std::span<const Value> g);

/// Pointwise max of two functions of equal length.
MaxPlusFunction oplus(std::span<const Value> f, std::span<const Value> g);

}  // namespace maxplus
