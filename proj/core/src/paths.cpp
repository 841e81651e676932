#include "maxplus/paths.hpp"

#include <cmath>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus::martin {

namespace {

void check_states(const DiscretePath& path, std::size_t n) {
  for (std::size_t x : path.states()) {
    if (x >= n) throw Error(Errc::InvalidArgument, "path visits state index " + std::to_string(x) +
                                                       " outside a " + std::to_string(n) + "-state kernel");
  }
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw Error(Errc::InvalidArgument, "epsilon must be finite and non-negative");
  }
}

}  // namespace

DiscretePath::DiscretePath(std::vector<std::int64_t> times, std::vector<std::size_t> states)
    : times_(std::move(times)), states_(std::move(states)) {
  if (times_.size() != states_.size()) throw Error(Errc::InvalidArgument, "path times and states differ in length");
  if (times_.empty()) throw Error(Errc::InvalidArgument, "path needs at least one sample");
  if (times_.front() < 0) throw Error(Errc::InvalidArgument, "path times must be non-negative");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (times_[i] <= times_[i - 1]) throw Error(Errc::InvalidArgument, "path times must be strictly increasing");
  }
}

KernelPowers::KernelPowers(const Matrix& one_step) : one_step_(one_step) {
  powers_.push_back(Matrix::identity(one_step_.size()));
}

const Matrix& KernelPowers::operator[](std::size_t t) {
  while (powers_.size() <= t) powers_.push_back(otimes(powers_.back(), one_step_));
  return powers_[t];
}

std::vector<Value> segment_rewards(const KernelMatrix& a, const DiscretePath& path) {
  check_states(path, a.size());
  KernelPowers powers(a.entries());
  std::vector<Value> seg;
  seg.reserve(path.size() > 0 ? path.size() - 1 : 0);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const auto gap = static_cast<std::size_t>(path.time(k + 1) - path.time(k));
    seg.push_back(powers[gap](path.state(k), path.state(k + 1)));
  }
  return seg;
}

Value path_reward(const KernelMatrix& a, const DiscretePath& path, std::size_t i, std::size_t j) {
  if (i > j || j >= path.size()) throw Error(Errc::InvalidArgument, "path_reward needs i <= j < length");
  check_states(path, a.size());
  KernelPowers powers(a.entries());
  Value total = Value::unit();
  for (std::size_t k = i; k < j; ++k) {
    const auto gap = static_cast<std::size_t>(path.time(k + 1) - path.time(k));
    total = otimes(total, powers[gap](path.state(k), path.state(k + 1)));
  }
  return total;
}

bool is_almost_geodesic(const DiscretePath& path, double epsilon, const StarMatrix& s) {
  check_epsilon(epsilon);
  const std::vector<Value> seg = segment_rewards(s.source(), path);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Value reward = Value::unit();
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      reward = otimes(reward, seg[j - 1]);
      if (!approx_less_equal(s(path.state(i), path.state(j)), otimes(reward, Value{epsilon}))) return false;
    }
  }
  return true;
}

bool is_almost_optimal(const DiscretePath& path, const MaxPlusFunction& h, double epsilon,
                       const KernelMatrix& a) {
  check_epsilon(epsilon);
  if (path.time(0) != 0) throw Error(Errc::InvalidArgument, "almost-optimality is defined for paths starting at time 0");
  if (h.size() != a.size()) throw Error(Errc::DimensionMismatch, "function and kernel sizes differ");
  const std::vector<Value> seg = segment_rewards(a, path);
  const Value start = h[path.state(0)];
  Value reward = Value::unit();
  for (std::size_t j = 1; j < path.size(); ++j) {
    reward = otimes(reward, seg[j - 1]);
    const Value rhs = otimes(otimes(Value{epsilon}, reward), h[path.state(j)]);
    if (!approx_less_equal(start, rhs)) return false;
  }
  return true;
}

Value geodesic_deficit(const DiscretePath& alpha, std::size_t s, std::size_t t, const StarMatrix& star) {
  if (s > t || t >= alpha.size()) throw Error(Errc::InvalidArgument, "geodesic_deficit needs s <= t < length");
  star.require_irreducible();
  const Value reward = path_reward(star.source(), alpha, s, t);
  if (reward.is_neg_inf()) return kNegInf;
  const std::size_t origin = alpha.state(0);
  return Value{star(origin, alpha.state(s)).finite() + reward.finite() -
               star(origin, alpha.state(t)).finite()};
}

double downhill_slack(double epsilon, std::size_t step) {
  return std::ldexp(epsilon, -static_cast<int>(step) - 2);
}

DiscretePath downhill_path(const KernelMatrix& a, const MaxPlusFunction& h, std::size_t x0,
                           double epsilon, std::size_t steps) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(Errc::InvalidArgument, "epsilon must be positive");
  if (x0 >= a.size()) throw Error(Errc::InvalidArgument, "start state out of range");
  if (h.size() != a.size()) throw Error(Errc::DimensionMismatch, "function and kernel sizes differ");
  if (!h[x0].is_finite()) {
    throw Error(Errc::HMinusInfinityAtStart, "h(" + a.states()[x0] + ") = -inf: no downhill path starts there");
  }
  if (!is_harmonic(a, h)) throw Error(Errc::NotHarmonic, "downhill paths need a harmonic function");

  std::vector<std::int64_t> times{0};
  std::vector<std::size_t> states{x0};
  std::size_t x = x0;
  for (std::size_t n = 0; n < steps; ++n) {
    std::size_t next = 0;
    Value best = kNegInf;
    for (std::size_t y = 0; y < a.size(); ++y) {
      const Value v = otimes(a(x, y), h[y]);
      if (v > best) {
        best = v;
        next = y;
      }
    }
    // h(x) = max_y A(x,y) + h(y) is finite, so the argmax meets the slack.
    if (!approx_less_equal(h[x], otimes(best, Value{downhill_slack(epsilon, n)}))) {
      throw Error(Errc::NotHarmonic, "downhill step could not meet its slack");
    }
    x = next;
    times.push_back(static_cast<std::int64_t>(n + 1));
    states.push_back(x);
  }
  return DiscretePath(std::move(times), std::move(states));
}

MartinObject geodesic_limit(const DiscretePath& path, double epsilon, const StarMatrix& s) {
  if (!is_almost_geodesic(path, epsilon, s)) {
    throw Error(Errc::NotAlmostGeodesic, "path is not an almost-geodesic for the given epsilon");
  }
  std::vector<MartinObject> objects = martin_kernel(s);
  std::vector<std::size_t> class_of(s.size(), 0);
  for (const auto& obj : objects)
    for (std::size_t x : obj.members) class_of[x] = obj.class_id;

  const std::size_t tail_start = path.size() / 2;
  const std::size_t limit_class = class_of[path.state(path.size() - 1)];
  for (std::size_t i = tail_start; i < path.size(); ++i) {
    if (class_of[path.state(i)] != limit_class) {
      throw Error(Errc::NotEventuallyConstant,
                  "Martin columns along the path do not settle: the second half of the samples "
                  "visits more than one recurrence class");
    }
  }
  MartinObject limit = std::move(objects[limit_class]);
  if (!limit.minimal) {
    throw Error(Errc::LimitNotMinimal, "path settles on the column of '" +
                                           s.source().states()[limit.representative()] +
                                           "', which is not in the minimal Martin space");
  }
  return limit;
}

}  // namespace maxplus::martin
