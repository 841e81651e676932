#pragma once

#include <vector>

#include "maxplus/lq/harmonic.hpp"

namespace maxplus::lq {

/// Central-difference gradient with spacing `step`. Throws GradientSingularity
/// when the forward and backward one-sided differences along some axis differ
/// by more than 1e-4 · (1 + |central|), i.e. h has a kink at x.
Vector gradient(const ScalarField& h, std::span<const double> x, double step = 1e-6);

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> points;
};

/// Integrates ẋ = gain · ∇h(x) from x0 with classical RK4 and a fixed step
/// (shrunk slightly so that it divides the duration). gain = 1 is the feedback
/// u = ∇h; the control maximizing -|x|² - |u|² + ∇h·u is u = ∇h/2, i.e.
/// gain = 1/2.
Trajectory feedback_trajectory(const ScalarField& h, std::span<const double> x0, double duration, double step,
                               double gain = 1.0);

/// Smallest ε for which the sampled trajectory is ε-almost-optimal for h:
///   max_j  h(x_0) - Σ_{k<j} A^{Δ_k}_λ(x_k, x_{k+1}) - h(x_j),
/// clamped at 0, where A^Δ_λ is finite_horizon_kernel.
double feedback_optimality_gap(const Trajectory& trajectory, const ScalarField& h, double lambda);

}  // namespace maxplus::lq
