#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "maxplus/lq/kernel.hpp"

namespace maxplus::lq {

/// A real function on Rⁿ (terminal reward, candidate eigenfunction, ...).
using ScalarField = std::function<double(std::span<const double>)>;

/// Cubic grid [-half_width, half_width]ⁿ with the given spacing, centred at the
/// origin. `threads` == 0 picks the hardware concurrency.
struct GridSpec {
  double half_width = 0.0;
  double spacing = 0.01;
  unsigned threads = 1;
};

/// Half-width 4·max|probe|, spacing 0.01.
GridSpec default_grid(const std::vector<Vector>& probes);

struct ProbeReport {
  Vector probe;
  /// max over grid points y of finite_horizon_kernel(probe, y, t, λ) + h(y).
  double sup = 0.0;
  /// |sup - h(probe)|.
  double residual = 0.0;
  Vector argmax_location;
  /// The argmax lies on the grid boundary, so the supremum may be cut off.
  bool clipped = false;
};

/// Residuals of S^t_λ h = h at each probe, by brute force over the grid. The
/// reduction picks the largest value and breaks ties by the lowest flat grid
/// index, so reports do not depend on the thread count.
std::vector<ProbeReport> harmonic_residuals(const ScalarField& h, double lambda, double t,
                                            const std::vector<Vector>& probes, const GridSpec& grid);

/// As harmonic_residuals, but throws GridTooSmall if any argmax is clipped.
std::vector<ProbeReport> verify_harmonic_lq(const ScalarField& h, double lambda, double t,
                                            const std::vector<Vector>& probes, const GridSpec& grid);

/// Thread count from MAXPLUS_THREADS (unset or 0 = hardware concurrency).
unsigned threads_from_environment();

}  // namespace maxplus::lq
