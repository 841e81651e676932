#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus::martin {

/// One-step kernel A¹ over a labelled finite state set, with a basepoint.
/// The discrete-time semigroup is generated by its max-plus powers.
class KernelMatrix {
 public:
  /// Throws InvalidArgument on empty or duplicate labels, a +inf entry, or a
  /// bad basepoint, and DimensionMismatch if sizes disagree.
  KernelMatrix(std::vector<std::string> states, Matrix one_step, std::size_t basepoint = 0);
  /// States are labelled "0", "1", ...
  explicit KernelMatrix(Matrix one_step, std::size_t basepoint = 0);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const Matrix& entries() const noexcept { return entries_; }
  std::size_t basepoint() const noexcept { return basepoint_; }

  Value operator()(std::size_t x, std::size_t y) const noexcept { return entries_(x, y); }

  /// Throws InvalidArgument for an unknown label.
  std::size_t index_of(std::string_view label) const;

  KernelMatrix with_basepoint(std::size_t b) const;

 private:
  std::vector<std::string> states_;
  Matrix entries_;
  std::size_t basepoint_ = 0;
};

/// Maximum cycle mean as an unreduced ratio weight / length, so that integer
/// kernels keep an exact representation.
struct CycleMean {
  double weight = 0.0;
  std::size_t length = 1;

  double value() const noexcept { return weight / static_cast<double>(length); }
};

/// Karp's recursion from a virtual source joined to every state. Throws NoCycle
/// when no cycle made of finite arcs exists.
CycleMean max_cycle_mean_ratio(const Matrix& a);

/// λ = max over cycles of weight / length.
double max_cycle_mean(const KernelMatrix& a);

/// Entrywise A - λ; the semigroup g ↦ -λt + Aᵗg. Throws InvalidArgument if λ is
/// not finite.
KernelMatrix normalize(const KernelMatrix& a, double lambda);

/// (Ag)(x) = max_y A(x,y) + g(y).
MaxPlusFunction apply(const KernelMatrix& a, const MaxPlusFunction& g);

}  // namespace maxplus::martin
