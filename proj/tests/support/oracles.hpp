#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "maxplus/maxplus.hpp"

// Reference implementations that share no code with the library: IEEE doubles
// with -inf, naive loops, exhaustive enumeration and plain numeric search.
namespace maxplus::testing {

using Dense = std::vector<std::vector<double>>;

Dense to_dense(const Matrix& m);
Dense dense_identity(std::size_t n);
Dense dense_product(const Dense& a, const Dense& b);
/// max over 0 <= t <= max_power of Aᵗ, by repeated naive multiplication.
Dense brute_force_star(const Dense& a, std::size_t max_power);
/// Reachability closure: true where some path (possibly empty) joins x to y.
std::vector<std::vector<bool>> reachability(const Dense& a);

struct CycleRatio {
  double weight = 0.0;
  std::size_t length = 0;
};
/// Best mean over all elementary cycles, by exhaustive DFS; nullopt if acyclic.
std::optional<CycleRatio> brute_force_max_cycle_mean(const Dense& a);

/// Action of the optimal path as printed, with no rearrangement:
/// -((|x|²+|y|²) cosh T - 2 x·y) / sinh T - λT.
double naive_pathaction(std::span<const double> x, std::span<const double> y, double horizon, double lambda);

struct SweepResult {
  double value = 0.0;
  double horizon = 0.0;
};
/// Maximum of naive_pathaction over T by a log-spaced sweep of [1e-6, 40]
/// followed by golden-section refinement around the best sample.
SweepResult sweep_star(std::span<const double> x, std::span<const double> y, double lambda);

/// Root of d/dT naive_pathaction, the derivative taken by complex step and the
/// root located by a sign-change scan and bisection on [lo, hi].
double argmax_by_complex_step(std::span<const double> x, std::span<const double> y, double lambda, double lo,
                              double hi);

/// Random irreducible integer kernels with 1..max_states states, rescaled so
/// that the maximum cycle mean is exactly 0. Labels are "s0", "s1", ...;
/// the basepoint is random.
std::vector<martin::KernelMatrix> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_states = 6);

/// Random weights in {-inf} ∪ [lo, hi] ∩ Z, with at least one finite entry.
martin::MartinMeasure random_measure(std::size_t size, std::mt19937_64& rng, int lo = -8, int hi = 3);

}  // namespace maxplus::testing
