#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace maxplus::lq {

/// Linear-quadratic model on Rⁿ with dynamics ẋ = u and Lagrangian
/// L(x,u) = -|x|² - |u|². All kernels below are for the semigroup normalized
/// by the eigenvalue λ, i.e. they carry the -λT term.
using Vector = std::vector<double>;

/// Validated model parameters.
class LqParams {
 public:
  /// Throws InvalidArgument for dim == 0 or λ < 0 (eigenvalues of this
  /// semigroup are non-negative: the zero control holds the origin at no cost).
  LqParams(std::size_t dim, double lambda);

  std::size_t dim() const noexcept { return dim_; }
  double lambda() const noexcept { return lambda_; }

 private:
  std::size_t dim_;
  double lambda_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm_squared(std::span<const double> a);
double norm(std::span<const double> a);
/// |a - b|², without forming the difference vector.
double distance_squared(std::span<const double> a, std::span<const double> b);

/// Throws NonUnitDirection unless | |n| - 1 | <= 1e-12.
void require_unit(std::span<const double> n);

/// Reward of the optimal path from x to y in time T:
///   -((|x|²+|y|²) cosh T - 2 x·y) / sinh T - λT.
/// Evaluated as -|x-y|² coth T - 2 x·y tanh(T/2) - λT, which is the same
/// expression rearranged so it neither cancels as T → 0 nor overflows for
/// large T. Throws NonpositiveHorizon for T <= 0.
double finite_horizon_kernel(std::span<const double> x, std::span<const double> y, double horizon,
                             double lambda);

/// Extremal of the Euler equation ẍ = x joining x at time 0 to y at time T:
/// x(t) = W eᵗ + Z e⁻ᵗ.
struct EulerPath {
  Vector w;
  Vector z;
  double horizon = 0.0;

  Vector position(double t) const;
  Vector velocity(double t) const;
  /// `samples` >= 2 equally spaced points on [0, T], endpoints included.
  std::vector<Vector> sample(std::size_t samples) const;
};

/// Throws NonpositiveHorizon, DimensionMismatch.
EulerPath euler_path(std::span<const double> x, std::span<const double> y, double horizon);

/// -∫₀ᵀ (|x(t)|² + |ẋ(t)|² + λ) dt along the path, by adaptive Simpson
/// quadrature to absolute tolerance `tol`.
double action_by_quadrature(const EulerPath& path, double lambda, double tol = 1e-12);

/// The horizon maximizing finite_horizon_kernel over T > 0.
/// λ = 0: cosh T = (|x|²+|y|²)/(2x·y) when x·y > 0, +inf otherwise.
/// λ > 0: λ cosh T = -x·y + sqrt((x·y)² + λ² + λ(|x|²+|y|²)).
/// Returns 0 when x = y (the supremum is the T → 0 limit).
/// Throws BothEndpointsZeroWithLambdaZero, InvalidArgument (λ < 0).
double optimal_horizon(std::span<const double> x, std::span<const double> y, double lambda);

/// A*(x,y) = sup over T > 0 of finite_horizon_kernel. For λ = 0 this is
/// -|x-y||x+y| if x·y > 0 and -|x|²-|y|² otherwise; for λ > 0 the optimal
/// cosh T is substituted back into the kernel. A*(x,x) = 0 exactly.
double star_kernel(std::span<const double> x, std::span<const double> y, double lambda);

/// A*(0,y) for λ > 0: -|y| sqrt(λ+|y|²) - λ log((sqrt(λ+|y|²) + |y|) / sqrt λ).
/// Throws NonpositiveLambda.
double star_kernel_origin(std::span<const double> y, double lambda);

/// Horofunction h_n(x) = lim_{r→∞} A*(x, rn) - A*(0, rn), normalized at the
/// origin. With s = x·n:
///   λ = 0:  -|x|² + 2s² if s > 0, else -|x|²
///   λ > 0:  -λ|x|²/R² + s(λ + 2|x|²)/R - λ log(R/√λ),  R = sqrt(s²+λ) - s.
/// Throws NonUnitDirection, InvalidArgument (λ < 0).
double horofunction(std::span<const double> x, std::span<const double> n, double lambda);

}  // namespace maxplus::lq
