#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maxplus/kernel.hpp"

namespace maxplus::martin {

/// A* = sup_t Aᵗ together with the kernel it was computed from.
class StarMatrix {
 public:
  StarMatrix(Matrix entries, KernelMatrix source, std::vector<std::string> diagnostics);

  const Matrix& entries() const noexcept { return entries_; }
  const KernelMatrix& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t basepoint() const noexcept { return source_.basepoint(); }

  Value operator()(std::size_t x, std::size_t y) const noexcept { return entries_(x, y); }

  /// Some entry is -inf, so the instance is not irreducible and the Martin
  /// machinery does not apply.
  bool assumption_violated() const noexcept { return assumption_violated_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

  /// Throws AssumptionViolated when the instance is flagged.
  void require_irreducible() const;

 private:
  Matrix entries_;
  KernelMatrix source_;
  std::vector<std::string> diagnostics_;
  bool assumption_violated_ = false;
};

/// All-pairs longest paths over I ⊕ A (Floyd-Warshall in the max-plus
/// semiring). Throws PositiveCycle when some cycle mean is positive, since the
/// supremum would be +inf. Kernels whose star has -inf entries are accepted but
/// flagged.
StarMatrix kleene_star(const KernelMatrix& a);

/// Partition of the states under x ~ y iff A*(x,y) + A*(y,x) = 0. Classes are
/// sorted, and listed by smallest member.
std::vector<std::vector<std::size_t>> recurrence_classes(const StarMatrix& s);

/// A♮(x,y) = A*(b,x) + A*(x,y) - A*(b,y); every entry is <= 0.
Matrix natural_kernel(const StarMatrix& s);

}  // namespace maxplus::martin
