#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "errc_matchers.hpp"
#include "maxplus/lq/harmonic.hpp"

using namespace maxplus;
using namespace maxplus::lq;
using Catch::Matchers::WithinAbs;

namespace {

double neg_quadratic(std::span<const double> x) { return -norm_squared(x); }
double pos_quadratic(std::span<const double> x) { return norm_squared(x); }

ScalarField horo(Vector n, double lambda) {
  return [n = std::move(n), lambda](std::span<const double> x) { return horofunction(x, n, lambda); };
}

std::vector<Vector> ring(double radius, int count) {
  std::vector<Vector> out;
  for (int k = 0; k < count; ++k) {
    const double a = 2.399963229728653 * k;
    const double r = radius * (k % 4 + 1) / 4.0;
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

}  // namespace

TEST_CASE("default grid", "[lq][harmonic]") {
  const GridSpec g = default_grid({{1.0, 0.0}, {0.0, -2.0}});
  CHECK(g.half_width == 8.0);
  CHECK(g.spacing == 0.01);
  CHECK(default_grid({{0.0, 0.0}}).half_width == 4.0);
}

TEST_CASE("-|x|² is an eigenfunction with eigenvalue 0", "[lq][harmonic]") {
  const auto probes = ring(2.0, 8);
  const auto reports = verify_harmonic_lq(neg_quadratic, 0.0, 1.0, probes, default_grid(probes));
  REQUIRE(reports.size() == probes.size());
  for (const auto& r : reports) {
    CHECK(r.residual <= 1e-3);
    CHECK_FALSE(r.clipped);
    // The optimal path is x e^{-t}.
    for (std::size_t k = 0; k < 2; ++k) CHECK_THAT(r.argmax_location[k], WithinAbs(r.probe[k] * std::exp(-1.0), 0.011));
  }
}

TEST_CASE("horofunctions are eigenfunctions", "[lq][harmonic]") {
  const auto probes = ring(1.5, 6);
  GridSpec grid = default_grid(probes);
  for (double lambda : {0.0, 1.0}) {
    const auto reports = verify_harmonic_lq(horo({0.0, 1.0}, lambda), lambda, 1.0, probes, grid);
    for (const auto& r : reports) CHECK(r.residual <= 1e-3);
  }
}

TEST_CASE("a wrong eigenvalue leaves a residual of λt", "[lq][harmonic]") {
  const std::vector<Vector> probes{{0.5, 0.5}};
  const auto reports = harmonic_residuals(neg_quadratic, 0.3, 1.0, probes, default_grid(probes));
  CHECK_THAT(reports[0].residual, WithinAbs(0.3, 1e-3));
}

TEST_CASE("+|x|² escapes the default grid", "[lq][harmonic]") {
  const std::vector<Vector> probes{{1.0, 1.0}, {-2.0, 0.0}};
  const GridSpec grid = default_grid(probes);
  const auto reports = harmonic_residuals(pos_quadratic, 0.0, 2.0, probes, grid);
  bool clipped = false;
  for (const auto& r : reports) clipped = clipped || r.clipped;
  CHECK(clipped);
  CHECK_ERRC(verify_harmonic_lq(pos_quadratic, 0.0, 2.0, probes, grid), Errc::GridTooSmall);
}

TEST_CASE("reports do not depend on the thread count", "[lq][harmonic]") {
  const auto probes = ring(2.0, 5);
  GridSpec one{4.0, 0.02, 1};
  GridSpec three{4.0, 0.02, 3};
  const auto a = harmonic_residuals(horo({0.6, 0.8}, 0.5), 0.5, 0.7, probes, one);
  const auto b = harmonic_residuals(horo({0.6, 0.8}, 0.5), 0.5, 0.7, probes, three);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sup == b[i].sup);
    CHECK(a[i].residual == b[i].residual);
    CHECK(a[i].argmax_location == b[i].argmax_location);
    CHECK(a[i].clipped == b[i].clipped);
  }
}

TEST_CASE("ties go to the lowest grid index", "[lq][harmonic]") {
  const double coth = 1.0 / std::tanh(1.0);
  const auto level = [coth](std::span<const double> y) { return (y[0] * y[0]) * coth; };
  for (unsigned threads : {1U, 3U}) {
    const auto r = harmonic_residuals(level, 0.0, 1.0, {{0.0}}, GridSpec{2.0, 0.5, threads});
    CHECK(r[0].argmax_location == Vector{-2.0});
    CHECK(r[0].clipped);
  }
}

TEST_CASE("harmonic check errors", "[lq][harmonic]") {
  const std::vector<Vector> probes{{1.0, 0.0}};
  const GridSpec grid{2.0, 0.1, 1};
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 0.0, probes, grid), Errc::NonpositiveHorizon);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, -1.0, 1.0, probes, grid), Errc::InvalidArgument);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 1.0, {}, grid), Errc::InvalidArgument);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 1.0, {Vector{}}, grid), Errc::InvalidArgument);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 1.0, {{1.0, 0.0}, {1.0}}, grid), Errc::DimensionMismatch);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 1.0, probes, GridSpec{0.0, 0.1, 1}), Errc::InvalidArgument);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 1.0, probes, GridSpec{1.0, -0.1, 1}), Errc::InvalidArgument);
  CHECK_ERRC(harmonic_residuals(neg_quadratic, 0.0, 1.0, {{0.0, 0.0, 0.0, 0.0, 0.0}}, GridSpec{10.0, 0.01, 1}),
             Errc::InvalidArgument);
  const auto nowhere = [](std::span<const double>) { return -std::numeric_limits<double>::infinity(); };
  CHECK_ERRC(harmonic_residuals(nowhere, 0.0, 1.0, probes, grid), Errc::InvalidArgument);
}
