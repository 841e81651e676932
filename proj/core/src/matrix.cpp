#include "maxplus/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus {

Matrix::Matrix(std::initializer_list<std::initializer_list<Value>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) {
      throw Error(Errc::DimensionMismatch, "matrix rows must have length " + std::to_string(n_));
    }
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Value::unit();
  return m;
}

bool Matrix::all_finite() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Value v) { return v.is_finite(); });
}

bool Matrix::has_neg_inf() const noexcept {
  return std::any_of(a_.begin(), a_.end(), [](Value v) { return v.is_neg_inf(); });
}

bool Matrix::is_integer_valued() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Value v) {
    return !v.is_finite() || v.finite() == std::trunc(v.finite());
  });
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "oplus: sizes differ");
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = oplus(a(i, j), b(i, j));
  return r;
}

Matrix otimes(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "otimes: sizes differ");
  const std::size_t n = a.size();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Value aik = a(i, k);
      if (aik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) = oplus(r(i, j), otimes(aik, b(k, j)));
    }
  }
  return r;
}

Matrix power(const Matrix& a, std::size_t t) {
  Matrix result = Matrix::identity(a.size());
  Matrix base = a;
  while (t > 0) {
    if (t & 1U) result = otimes(result, base);
    t >>= 1U;
    if (t > 0) base = otimes(base, base);
  }
  return result;
}

MaxPlusFunction apply(const Matrix& a, std::span<const Value> g) {
  if (g.size() != a.size()) {
    throw Error(Errc::DimensionMismatch,
                "function has " + std::to_string(g.size()) + " entries, kernel has " +
                    std::to_string(a.size()) + " states");
  }
  MaxPlusFunction out(a.size(), kNegInf);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) out[x] = oplus(out[x], otimes(a(x, y), g[y]));
  return out;
}

MaxPlusFunction oplus(std::span<const Value> f, std::span<const Value> g) {
  if (f.size() != g.size()) throw Error(Errc::DimensionMismatch, "oplus: function lengths differ");
  MaxPlusFunction out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = oplus(f[i], g[i]);
  return out;
}

}  // namespace maxplus
