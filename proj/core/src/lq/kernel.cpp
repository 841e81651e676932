#include "maxplus/lq/kernel.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus::lq {

namespace {

void require_same_dim(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "vectors of dimension " + std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
  }
}

void require_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(Errc::InvalidArgument, "eigenvalue must be finite and non-negative");
  }
}

bool is_zero(std::span<const double> x) {
  for (double v : x)
    if (v != 0.0) return false;
  return true;
}

bool equal(std::span<const double> x, std::span<const double> y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

// cosh T* - 1 for λ > 0, in a form free of cancellation.
double optimal_cosh_minus_one(double dist2, double sum2, double p, double lambda) {
  const double root = std::sqrt(p * p + lambda * lambda + lambda * sum2);
  return dist2 / (root + p + lambda);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

LqParams::LqParams(std::size_t dim, double lambda) : dim_(dim), lambda_(lambda) {
  if (dim_ == 0) throw Error(Errc::InvalidArgument, "dimension must be positive");
  require_lambda(lambda_);
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_squared(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(norm_squared(a)); }

double distance_squared(std::span<const double> a, std::span<const double> b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

void require_unit(std::span<const double> n) {
  if (std::abs(norm(n) - 1.0) > 1e-12) {
    throw Error(Errc::NonUnitDirection, "direction must have unit Euclidean norm");
  }
}

double finite_horizon_kernel(std::span<const double> x, std::span<const double> y, double horizon,
                             double lambda) {
  if (!(horizon > 0.0)) throw Error(Errc::NonpositiveHorizon, "horizon must be positive");
  const double dist2 = distance_squared(x, y);
  const double p = dot(x, y);
  const double coth = 1.0 / std::tanh(horizon);
  return -dist2 * coth - 2.0 * p * std::tanh(0.5 * horizon) - lambda * horizon;
}

Vector EulerPath::position(double t) const {
  Vector out(w.size());
  const double et = std::exp(t);
  const double emt = std::exp(-t);
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] * et + z[i] * emt;
  return out;
}

Vector EulerPath::velocity(double t) const {
  Vector out(w.size());
  const double et = std::exp(t);
  const double emt = std::exp(-t);
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] * et - z[i] * emt;
  return out;
}

std::vector<Vector> EulerPath::sample(std::size_t samples) const {
  if (samples < 2) throw Error(Errc::InvalidArgument, "need at least two samples");
  std::vector<Vector> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    out.push_back(position(horizon * static_cast<double>(k) / static_cast<double>(samples - 1)));
  }
  return out;
}

EulerPath euler_path(std::span<const double> x, std::span<const double> y, double horizon) {
  if (!(horizon > 0.0)) throw Error(Errc::NonpositiveHorizon, "horizon must be positive");
  require_same_dim(x, y);
  const double denom = 2.0 * std::sinh(horizon);
  const double et = std::exp(horizon);
  const double emt = std::exp(-horizon);
  EulerPath path;
  path.horizon = horizon;
  path.w.resize(x.size());
  path.z.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    path.w[i] = (y[i] - emt * x[i]) / denom;
    path.z[i] = (et * x[i] - y[i]) / denom;
  }
  return path;
}

double action_by_quadrature(const EulerPath& path, double lambda, double tol) {
  const std::function<double(double)> integrand = [&](double t) {
    return norm_squared(path.position(t)) + norm_squared(path.velocity(t)) + lambda;
  };
  const double a = 0.0;
  const double b = path.horizon;
  const double fa = integrand(a);
  const double fb = integrand(b);
  const double fm = integrand(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return -adaptive_simpson(integrand, a, b, fa, fm, fb, whole, tol, 60);
}

double optimal_horizon(std::span<const double> x, std::span<const double> y, double lambda) {
  require_lambda(lambda);
  require_same_dim(x, y);
  const double dist2 = distance_squared(x, y);
  const double p = dot(x, y);
  double cosh_minus_one = 0.0;
  if (lambda == 0.0) {
    if (is_zero(x) && is_zero(y)) {
      throw Error(Errc::BothEndpointsZeroWithLambdaZero,
                  "with eigenvalue 0 and both endpoints at the origin every horizon is optimal");
    }
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    cosh_minus_one = dist2 / (2.0 * p);
  } else {
    cosh_minus_one = optimal_cosh_minus_one(dist2, norm_squared(x) + norm_squared(y), p, lambda);
  }
  const double d = cosh_minus_one;
  return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

double star_kernel(std::span<const double> x, std::span<const double> y, double lambda) {
  require_lambda(lambda);
  require_same_dim(x, y);
  if (equal(x, y)) return 0.0;
  const double dist2 = distance_squared(x, y);
  const double sum2 = norm_squared(x) + norm_squared(y);
  const double p = dot(x, y);
  if (lambda == 0.0) {
    if (p <= 0.0) return -sum2;
    double plus2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) plus2 += (x[i] + y[i]) * (x[i] + y[i]);
    return -std::sqrt(dist2 * plus2);
  }
  const double d = optimal_cosh_minus_one(dist2, sum2, p, lambda);
  const double sinh_t = std::sqrt(d * (d + 2.0));
  const double horizon = std::log1p(d + sinh_t);
  // coth T = cosh T / sinh T and tanh(T/2) = sinh T / (1 + cosh T).
  return -dist2 * (1.0 + d) / sinh_t - 2.0 * p * sinh_t / (2.0 + d) - lambda * horizon;
}

double star_kernel_origin(std::span<const double> y, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(Errc::NonpositiveLambda, "the closed form for A*(0,y) needs a positive eigenvalue");
  }
  const double r = norm(y);
  if (r == 0.0) return 0.0;
  return -r * std::sqrt(lambda + r * r) - lambda * std::asinh(r / std::sqrt(lambda));
}

double horofunction(std::span<const double> x, std::span<const double> n, double lambda) {
  require_lambda(lambda);
  require_same_dim(x, n);
  require_unit(n);
  if (is_zero(x)) return 0.0;
  const double s = dot(x, n);
  const double x2 = norm_squared(x);
  if (lambda == 0.0) return s > 0.0 ? -x2 + 2.0 * s * s : -x2;
  const double root = std::sqrt(s * s + lambda);
  const double r = s >= 0.0 ? lambda / (root + s) : root - s;
  return -lambda * x2 / (r * r) + s * (lambda + 2.0 * x2) / r - lambda * std::log(r / std::sqrt(lambda));
}

}  // namespace maxplus::lq
