#include "maxplus/lq/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "maxplus/error.hpp"

namespace maxplus::lq {

namespace {

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t flat = std::numeric_limits<std::size_t>::max();
};

struct GridLayout {
  std::size_t dim = 0;
  std::size_t per_axis = 0;  // points per axis
  std::size_t rows = 0;      // per_axis^(dim-1)
  double half_width = 0.0;
  double spacing = 0.0;

  double coordinate(std::size_t i) const { return -half_width + static_cast<double>(i) * spacing; }

  void row_prefix(std::size_t row, Vector& y) const {
    for (std::size_t k = dim - 1; k-- > 0;) {
      y[k] = coordinate(row % per_axis);
      row /= per_axis;
    }
  }
};

GridLayout make_layout(std::size_t dim, const GridSpec& grid) {
  if (!(grid.spacing > 0.0) || !(grid.half_width > 0.0)) {
    throw Error(Errc::InvalidArgument, "grid half-width and spacing must be positive");
  }
  const double cells = std::round(2.0 * grid.half_width / grid.spacing);
  GridLayout layout;
  layout.dim = dim;
  layout.per_axis = static_cast<std::size_t>(cells) + 1;
  layout.half_width = grid.half_width;
  layout.spacing = 2.0 * grid.half_width / cells;
  const double total = std::pow(static_cast<double>(layout.per_axis), static_cast<double>(dim));
  if (total > 4e10) throw Error(Errc::InvalidArgument, "grid has too many points (" + std::to_string(total) + ")");
  layout.rows = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) layout.rows *= layout.per_axis;
  return layout;
}

void scan_rows(const ScalarField& h, const GridLayout& layout, const std::vector<Vector>& probes, double coth,
               double cross, std::size_t row_begin, std::size_t row_end, std::vector<Best>& best) {
  const std::size_t d = layout.dim;
  const std::size_t m = layout.per_axis;
  std::vector<double> last(m);
  for (std::size_t j = 0; j < m; ++j) last[j] = layout.coordinate(j);
  std::vector<double> g(m);
  Vector y(d);

  for (std::size_t row = row_begin; row < row_end; ++row) {
    layout.row_prefix(row, y);
    double prefix2 = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) prefix2 += y[k] * y[k];
    for (std::size_t j = 0; j < m; ++j) {
      y[d - 1] = last[j];
      g[j] = h(y) - (prefix2 + last[j] * last[j]) * coth;
    }
    const std::size_t offset = row * m;
    for (std::size_t q = 0; q < probes.size(); ++q) {
      const Vector& x = probes[q];
      double base = 0.0;
      for (std::size_t k = 0; k + 1 < d; ++k) base += x[k] * y[k];
      const double xl = x[d - 1];
      Best& b = best[q];
      for (std::size_t j = 0; j < m; ++j) {
        const double v = g[j] + cross * (base + xl * last[j]);
        if (v > b.value) {
          b.value = v;
          b.flat = offset + j;
        }
      }
    }
  }
}

}  // namespace

GridSpec default_grid(const std::vector<Vector>& probes) {
  double radius = 0.0;
  for (const auto& p : probes) radius = std::max(radius, norm(p));
  GridSpec grid;
  grid.half_width = 4.0 * (radius > 0.0 ? radius : 1.0);
  grid.spacing = 0.01;
  return grid;
}

unsigned threads_from_environment() {
  const char* env = std::getenv("MAXPLUS_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 0) return 0;
  return static_cast<unsigned>(v);
}

std::vector<ProbeReport> harmonic_residuals(const ScalarField& h, double lambda, double t,
                                            const std::vector<Vector>& probes, const GridSpec& grid) {
  if (!(t > 0.0)) throw Error(Errc::NonpositiveHorizon, "semigroup time must be positive");
  if (!(lambda >= 0.0)) throw Error(Errc::InvalidArgument, "eigenvalue must be non-negative");
  if (probes.empty()) throw Error(Errc::InvalidArgument, "no probe points");
  const std::size_t dim = probes.front().size();
  if (dim == 0) throw Error(Errc::InvalidArgument, "probe dimension must be positive");
  for (const auto& p : probes) {
    if (p.size() != dim) throw Error(Errc::DimensionMismatch, "probes have different dimensions");
  }
  const GridLayout layout = make_layout(dim, grid);

  // finite_horizon_kernel(x,y,t,λ) = -(|x|²+|y|²) coth t + 2 x·y / sinh t - λt.
  const double coth = 1.0 / std::tanh(t);
  const double cross = 2.0 / std::sinh(t);

  unsigned workers = grid.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : grid.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, layout.rows));
  std::vector<std::vector<Best>> partial(workers, std::vector<Best>(probes.size()));
  const std::size_t block = (layout.rows + workers - 1) / workers;
  if (workers == 1) {
    scan_rows(h, layout, probes, coth, cross, 0, layout.rows, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(layout.rows, w * block);
      const std::size_t end = std::min(layout.rows, begin + block);
      pool.emplace_back(scan_rows, std::cref(h), std::cref(layout), std::cref(probes), coth, cross, begin, end,
                        std::ref(partial[w]));
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ProbeReport> reports;
  reports.reserve(probes.size());
  for (std::size_t q = 0; q < probes.size(); ++q) {
    // Blocks cover increasing flat indices, so a strict comparison keeps the
    // lowest index among ties.
    Best best;
    for (const auto& part : partial)
      if (part[q].value > best.value) best = part[q];
    if (best.flat == std::numeric_limits<std::size_t>::max()) {
      throw Error(Errc::InvalidArgument, "candidate function is -inf or NaN on the whole grid");
    }

    ProbeReport report;
    report.probe = probes[q];
    report.sup = best.value - norm_squared(probes[q]) * coth - lambda * t;
    report.residual = std::abs(report.sup - h(probes[q]));
    report.argmax_location.assign(dim, 0.0);
    std::size_t flat = best.flat;
    for (std::size_t k = dim; k-- > 0;) {
      const std::size_t i = flat % layout.per_axis;
      flat /= layout.per_axis;
      report.argmax_location[k] = layout.coordinate(i);
      if (i == 0 || i + 1 == layout.per_axis) report.clipped = true;
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<ProbeReport> verify_harmonic_lq(const ScalarField& h, double lambda, double t,
                                            const std::vector<Vector>& probes, const GridSpec& grid) {
  auto reports = harmonic_residuals(h, lambda, t, probes, grid);
  for (const auto& r : reports) {
    if (r.clipped) {
      throw Error(Errc::GridTooSmall,
                  "the grid maximizer touches the grid boundary, so the supremum was clipped; widen the grid");
    }
  }
  return reports;
}

}  // namespace maxplus::lq
