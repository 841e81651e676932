#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxplus/martin.hpp"

namespace maxplus::martin {

/// A path sampled at strictly increasing integer times.
class DiscretePath {
 public:
  /// Throws InvalidArgument unless lengths match, the path is non-empty, and
  /// times are non-negative and strictly increasing.
  DiscretePath(std::vector<std::int64_t> times, std::vector<std::size_t> states);

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::int64_t>& times() const noexcept { return times_; }
  const std::vector<std::size_t>& states() const noexcept { return states_; }
  std::int64_t time(std::size_t i) const { return times_.at(i); }
  std::size_t state(std::size_t i) const { return states_.at(i); }

 private:
  std::vector<std::int64_t> times_;
  std::vector<std::size_t> states_;
};

/// Lazily extended table of the powers A⁰, A¹, A², ...
class KernelPowers {
 public:
  explicit KernelPowers(const Matrix& one_step);

  const Matrix& operator[](std::size_t t);

 private:
  Matrix one_step_;
  std::vector<Matrix> powers_;
};

/// Σ_{k=i}^{j-1} A^{t_{k+1}-t_k}(γ_k, γ_{k+1}). Coarsening the sample set can
/// only increase this sum, so it is the reward of γ restricted to [t_i, t_j].
Value path_reward(const KernelMatrix& a, const DiscretePath& path, std::size_t i, std::size_t j);

/// Rewards of every consecutive sample pair, seg[k] for the step k -> k+1.
std::vector<Value> segment_rewards(const KernelMatrix& a, const DiscretePath& path);

/// For all sampled i < j: reward(i,j) >= A*(γ_i, γ_j) - ε. Testing the finest
/// partition is enough because deleting interior samples never lowers a reward.
bool is_almost_geodesic(const DiscretePath& path, double epsilon, const StarMatrix& s);

/// For all sampled j: h(γ_0) <= ε + reward(0,j) + h(γ_j). The path must start at
/// time 0.
bool is_almost_optimal(const DiscretePath& path, const MaxPlusFunction& h, double epsilon,
                       const KernelMatrix& a);

/// J_α(s,t) = A*(α_0, α_s) + reward(s,t) - A*(α_0, α_t), with s <= t sample
/// indices. Non-positive, and additive over s <= u <= t.
Value geodesic_deficit(const DiscretePath& alpha, std::size_t s, std::size_t t, const StarMatrix& star);

/// Slack allowed at step n of the downhill construction: ε / 2^{n+2}, so the
/// total stays below ε/2.
double downhill_slack(double epsilon, std::size_t step);

/// Greedy path from x0 at times 0..steps: each step moves to the lowest-index y
/// maximizing A(x_n, y) + h(y). For harmonic h this meets every slack with
/// zero loss, so the result is ε-almost-optimal for h.
/// Throws HMinusInfinityAtStart, NotHarmonic, InvalidArgument (ε <= 0).
DiscretePath downhill_path(const KernelMatrix& a, const MaxPlusFunction& h, std::size_t x0,
                           double epsilon, std::size_t steps);

/// Limit of the Martin columns K(·,γ_i). A finite sample has no "eventually",
/// so the second half of the samples must sit in one recurrence class. Throws
/// NotAlmostGeodesic, NotEventuallyConstant, and LimitNotMinimal if the limit
/// column is not in the minimal space.
MartinObject geodesic_limit(const DiscretePath& path, double epsilon, const StarMatrix& s);

}  // namespace maxplus::martin
