#include "maxplus/lq/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus::lq {

Vector gradient(const ScalarField& h, std::span<const double> x, double step) {
  if (!(step > 0.0)) throw Error(Errc::InvalidArgument, "finite-difference spacing must be positive");
  Vector probe(x.begin(), x.end());
  Vector g(x.size());
  const double centre = h(probe);
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double up = h(probe);
    probe[i] = x[i] - step;
    const double down = h(probe);
    probe[i] = x[i];
    const double forward = (up - centre) / step;
    const double backward = (centre - down) / step;
    g[i] = (up - down) / (2.0 * step);
    if (std::abs(forward - backward) > 1e-4 * (1.0 + std::abs(g[i]))) {
      throw Error(Errc::GradientSingularity, "one-sided derivatives disagree along axis " + std::to_string(i) +
                                                 ": the function is not differentiable here");
    }
  }
  return g;
}

Trajectory feedback_trajectory(const ScalarField& h, std::span<const double> x0, double duration, double step,
                               double gain) {
  if (!(duration > 0.0) || !(step > 0.0)) throw Error(Errc::InvalidArgument, "duration and step must be positive");
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(duration / step - 1e-9)));
  const double dt = duration / static_cast<double>(steps);
  const std::size_t d = x0.size();

  const auto field = [&](const Vector& x) {
    Vector v = gradient(h, x);
    for (double& c : v) c *= gain;
    return v;
  };
  const auto offset = [d](const Vector& x, const Vector& k, double s) {
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = x[i] + s * k[i];
    return out;
  };

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.points.reserve(steps + 1);
  Vector x(x0.begin(), x0.end());
  traj.times.push_back(0.0);
  traj.points.push_back(x);
  for (std::size_t n = 0; n < steps; ++n) {
    const Vector k1 = field(x);
    const Vector k2 = field(offset(x, k1, 0.5 * dt));
    const Vector k3 = field(offset(x, k2, 0.5 * dt));
    const Vector k4 = field(offset(x, k3, dt));
    for (std::size_t i = 0; i < d; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    traj.times.push_back(static_cast<double>(n + 1) * dt);
    traj.points.push_back(x);
  }
  return traj;
}

double feedback_optimality_gap(const Trajectory& trajectory, const ScalarField& h, double lambda) {
  if (trajectory.points.size() != trajectory.times.size() || trajectory.points.empty()) {
    throw Error(Errc::InvalidArgument, "malformed trajectory");
  }
  const double start = h(trajectory.points.front());
  double reward = 0.0;
  double gap = 0.0;
  for (std::size_t j = 1; j < trajectory.points.size(); ++j) {
    const double dt = trajectory.times[j] - trajectory.times[j - 1];
    reward += finite_horizon_kernel(trajectory.points[j - 1], trajectory.points[j], dt, lambda);
    gap = std::max(gap, start - reward - h(trajectory.points[j]));
  }
  return gap;
}

}  // namespace maxplus::lq
