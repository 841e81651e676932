#include "maxplus/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "maxplus/error.hpp"

namespace maxplus::martin {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

KernelMatrix::KernelMatrix(std::vector<std::string> states, Matrix one_step, std::size_t basepoint)
    : states_(std::move(states)), entries_(std::move(one_step)), basepoint_(basepoint) {
  if (states_.empty()) throw Error(Errc::InvalidArgument, "kernel needs at least one state");
  if (states_.size() != entries_.size()) {
    throw Error(Errc::DimensionMismatch, "kernel has " + std::to_string(states_.size()) +
                                             " labels but a " + std::to_string(entries_.size()) +
                                             "x" + std::to_string(entries_.size()) + " matrix");
  }
  if (std::set<std::string>(states_.begin(), states_.end()).size() != states_.size()) {
    throw Error(Errc::InvalidArgument, "state labels must be unique");
  }
  if (basepoint_ >= states_.size()) throw Error(Errc::InvalidArgument, "basepoint out of range");
  for (Value v : entries_.data()) {
    if (v.is_pos_inf()) throw Error(Errc::InvalidArgument, "one-step kernel entries must be < +inf");
  }
}

KernelMatrix::KernelMatrix(Matrix one_step, std::size_t basepoint)
    : KernelMatrix(default_labels(one_step.size()), std::move(one_step), basepoint) {}

std::size_t KernelMatrix::index_of(std::string_view label) const {
  const auto it = std::find(states_.begin(), states_.end(), label);
  if (it == states_.end()) throw Error(Errc::InvalidArgument, "unknown state '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - states_.begin());
}

KernelMatrix KernelMatrix::with_basepoint(std::size_t b) const {
  return KernelMatrix(states_, entries_, b);
}

CycleMean max_cycle_mean_ratio(const Matrix& a) {
  const std::size_t n = a.size();
  // walks[k][v]: best weight of a k-arc walk ending at v, from any start.
  std::vector<std::vector<Value>> walks(n + 1, std::vector<Value>(n, kNegInf));
  std::fill(walks[0].begin(), walks[0].end(), Value::unit());
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (walks[k - 1][u].is_neg_inf()) continue;
      for (std::size_t v = 0; v < n; ++v) {
        walks[k][v] = oplus(walks[k][v], otimes(walks[k - 1][u], a(u, v)));
      }
    }
  }

  // Compare p/q against r/s by cross-multiplication; lengths are positive.
  const auto less = [](const CycleMean& l, const CycleMean& r) {
    return l.weight * static_cast<double>(r.length) < r.weight * static_cast<double>(l.length);
  };

  bool found = false;
  CycleMean best;
  for (std::size_t v = 0; v < n; ++v) {
    if (walks[n][v].is_neg_inf()) continue;
    bool have = false;
    CycleMean inner;
    for (std::size_t k = 0; k < n; ++k) {
      if (walks[k][v].is_neg_inf()) continue;
      const CycleMean candidate{walks[n][v].finite() - walks[k][v].finite(), n - k};
      if (!have || less(candidate, inner)) {
        inner = candidate;
        have = true;
      }
    }
    if (have && (!found || less(best, inner))) {
      best = inner;
      found = true;
    }
  }
  if (!found) throw Error(Errc::NoCycle, "no cycle made of finite arcs: the cycle mean is undefined");
  return best;
}

double max_cycle_mean(const KernelMatrix& a) { return max_cycle_mean_ratio(a.entries()).value(); }

KernelMatrix normalize(const KernelMatrix& a, double lambda) {
  if (!std::isfinite(lambda)) throw Error(Errc::InvalidArgument, "normalization constant must be finite");
  Matrix m = a.entries();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j).is_finite()) m(i, j) = Value{m(i, j).finite() - lambda};
  return KernelMatrix(a.states(), std::move(m), a.basepoint());
}

MaxPlusFunction apply(const KernelMatrix& a, const MaxPlusFunction& g) {
  return maxplus::apply(a.entries(), g);
}

}  // namespace maxplus::martin
