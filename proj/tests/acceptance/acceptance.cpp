#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "maxplus/maxplus.hpp"
#include "oracles.hpp"

using namespace maxplus;
using namespace maxplus::martin;
using lq::Vector;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240501;
constexpr std::size_t kCorpusSize = 500;

// Pinned tolerances.
constexpr double kStarTol = 1e-6;
constexpr double kHorizonRelTol = 1e-5;
constexpr double kWorkedTol = 1e-12;
constexpr double kHorofunctionTol = 1e-3;
constexpr double kHorofunctionFloor = 1e-7;
constexpr double kResidualTol = 1e-3;
constexpr double kInnerMaximizerTol = 1e-10;

constexpr double kStarBudget = 60.0;
constexpr double kHarmonicBudget = 120.0;
constexpr double kExactnessBudget = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

Vector random_point(std::size_t dim, std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  Vector v(dim);
  for (double& c : v) c = u(rng);
  return v;
}

Vector random_in_disc(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  for (;;) {
    Vector v{u(rng), u(rng)};
    if (lq::norm(v) <= r) return v;
  }
}

std::vector<Vector> golden_probes(std::size_t count, double radius) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double a = 2.399963229728653 * static_cast<double>(k);
    const double r = radius * static_cast<double>(k % 4 + 1) / 4.0;
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

const std::vector<KernelMatrix>& corpus() {
  static const std::vector<KernelMatrix> c = testing::random_corpus(kCorpusSize, kCorpusSeed);
  return c;
}

DiscretePath random_path(std::size_t states, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<std::int64_t> gap(1, 3);
  std::uniform_int_distribution<std::size_t> state(0, states - 1);
  const std::size_t m = len(rng);
  std::vector<std::int64_t> times{0};
  std::vector<std::size_t> seq{state(rng)};
  for (std::size_t i = 1; i < m; ++i) {
    times.push_back(times.back() + gap(rng));
    seq.push_back(state(rng));
  }
  return DiscretePath(times, seq);
}

MaxPlusFunction shift(const MaxPlusFunction& f, Value c) {
  MaxPlusFunction out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = otimes(f[i], c);
  return out;
}

// 1. star kernel against the T-sweep.
Outcome star_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  std::size_t cases = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 3);
    const double lambda = 0.5 * static_cast<double>((i / 3) % 3);
    const Vector x = random_point(dim, rng, 5.0);
    const Vector y = random_point(dim, rng, 5.0);
    double oracle = testing::sweep_star(x, y, lambda).value;
    if (lambda == 0.0 && lq::dot(x, y) <= 0.0) oracle = -(lq::norm_squared(x) + lq::norm_squared(y));
    worst = std::max(worst, std::abs(lq::star_kernel(x, y, lambda) - oracle));
    ++cases;
  }
  const double elapsed = seconds_since(start);
  return {worst <= kStarTol && elapsed <= kStarBudget,
          std::to_string(cases) + " pairs, max error " + fmt("%.3g", worst) + ", " + fmt("%.2f", elapsed) + " s"};
}

// 2. optimal horizon against the numeric argmax.
Outcome horizon_oracle() {
  std::mt19937_64 rng(202);
  double worst = 0.0;
  std::size_t compared = 0;
  std::size_t infinite = 0;
  std::size_t skipped = 0;
  bool ok = true;
  for (int i = 0; i < 3000; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 3);
    const double lambda = 0.5 * static_cast<double>(i % 3);
    const Vector x = random_point(dim, rng, 5.0);
    const Vector y = random_point(dim, rng, 5.0);
    const double t = lq::optimal_horizon(x, y, lambda);
    if (lambda == 0.0 && lq::dot(x, y) <= 0.0) {
      ok = ok && std::isinf(t);
      ++infinite;
      continue;
    }
    double expected_cosh = 0.0;
    if (lambda == 0.0) {
      expected_cosh = (lq::norm_squared(x) + lq::norm_squared(y)) / (2.0 * lq::dot(x, y));
    } else {
      const double p = lq::dot(x, y);
      expected_cosh =
          (-p + std::sqrt(p * p + lambda * lambda + lambda * (lq::norm_squared(x) + lq::norm_squared(y)))) / lambda;
    }
    const double closed = std::cosh(t);
    const double scale = std::max(1.0, expected_cosh);
    ok = ok && std::abs(closed - expected_cosh) <= kHorizonRelTol * scale;
    const double numeric = testing::argmax_by_complex_step(x, y, lambda, 1e-8, 35.0);
    if (std::isnan(numeric)) {
      ++skipped;
      continue;
    }
    const double err = std::abs(std::cosh(numeric) - closed) / scale;
    worst = std::max(worst, err);
    ++compared;
  }
  ok = ok && worst <= kHorizonRelTol && compared >= 1000;
  return {ok, std::to_string(compared) + " finite cases, " + std::to_string(infinite) + " at +inf, " +
                  std::to_string(skipped) + " without an interior maximizer, max relative error " +
                  fmt("%.3g", worst)};
}

// 3. worked value.
Outcome worked_value() {
  const Vector x{1.0, 0.0};
  const Vector y{2.0, 0.0};
  const double branch = lq::star_kernel(x, y, 0.0);
  const double substituted = testing::naive_pathaction(x, y, std::acosh(1.25), 0.0);
  const double stable = lq::finite_horizon_kernel(x, y, std::acosh(1.25), 0.0);
  const bool ok = std::abs(branch + 3.0) <= kWorkedTol && std::abs(substituted + 3.0) <= kWorkedTol &&
                  std::abs(stable + 3.0) <= kWorkedTol;
  return {ok, "branch " + fmt("%.15g", branch) + ", substituted " + fmt("%.15g", substituted)};
}

// 4. horofunction limits.
Outcome horofunction_limits() {
  std::mt19937_64 rng(404);
  double worst = 0.0;
  bool monotone = true;
  std::size_t cases = 0;
  for (double lambda : {0.0, 1.0}) {
    for (int k = 0; k < 12; ++k) {
      const double a = 2.0 * 3.141592653589793 * k / 12.0;
      const Vector n{std::cos(a), std::sin(a)};
      for (int p = 0; p < 20; ++p) {
        const Vector x = p == 0 ? Vector{0.0, 0.0} : random_in_disc(rng, 2.0);
        double previous = std::numeric_limits<double>::infinity();
        for (double r : {1e2, 1e3, 1e4}) {
          const Vector far{r * n[0], r * n[1]};
          const double limit = lq::star_kernel(x, far, lambda) - lq::star_kernel(Vector{0.0, 0.0}, far, lambda);
          const double error = std::abs(limit - lq::horofunction(x, n, lambda));
          monotone = monotone && error <= previous + kHorofunctionFloor;
          previous = error;
        }
        worst = std::max(worst, previous);
        ++cases;
      }
    }
  }
  return {monotone && worst <= kHorofunctionTol,
          std::to_string(cases) + " probes, max error at r=1e4 " + fmt("%.3g", worst) +
              (monotone ? ", monotone" : ", not monotone")};
}

// 5. eigenfunction verification on the grid.
Outcome eigenfunctions() {
  const auto start = Clock::now();
  const std::vector<Vector> probes = golden_probes(25, 2.0);
  const double radius = 2.0;
  const unsigned threads = lq::threads_from_environment();
  double worst = 0.0;
  double inner = 0.0;
  bool ok = true;

  const lq::ScalarField quadratic = [](std::span<const double> x) { return -lq::norm_squared(x); };
  const Vector n{0.0, 1.0};
  for (double t : {0.5, 1.0, 2.0}) {
    const lq::GridSpec grid{std::max(4.0 * radius, std::exp(t) * radius + 2.0), 0.01, threads};
    for (const auto& r : lq::verify_harmonic_lq(quadratic, 0.0, t, probes, grid)) worst = std::max(worst, r.residual);
    for (const auto& x : probes) {
      Vector y = x;
      for (double& c : y) c *= std::exp(-t);
      inner = std::max(inner, std::abs(lq::finite_horizon_kernel(x, y, t, 0.0) + quadratic(y) - quadratic(x)));
    }
    for (double lambda : {0.0, 1.0}) {
      const lq::ScalarField h = [&n, lambda](std::span<const double> x) { return lq::horofunction(x, n, lambda); };
      for (const auto& r : lq::verify_harmonic_lq(h, lambda, t, probes, grid)) worst = std::max(worst, r.residual);
    }
  }
  const double elapsed = seconds_since(start);
  ok = worst <= kResidualTol && inner <= kInnerMaximizerTol && elapsed <= kHarmonicBudget;
  return {ok, "max residual " + fmt("%.3g", worst) + ", analytic maximizer gap " + fmt("%.3g", inner) + ", " +
                  fmt("%.2f", elapsed) + " s"};
}

// 6. horosphere figures through the command line.
Outcome horosphere_figures() {
  const auto dir = std::filesystem::temp_directory_path() / "maxplus_acceptance_horosphere";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / "fig").string();
  std::ostringstream out;
  std::ostringstream err;
  const int svg = cli::run({"lq-horosphere", "--lambda", "0,1", "--n", "0,1", "--out", prefix}, out, err);
  const int code =
      cli::run({"lq-horosphere", "--lambda", "0,1", "--n", "0,1", "--format", "csv", "--out", prefix}, out, err);
  if (svg != 0 || code != 0) return {false, "lq-horosphere failed: " + err.str()};
  const bool figures =
      std::filesystem::exists(prefix + "_lambda_0.svg") && std::filesystem::exists(prefix + "_lambda_1.svg");

  // The second JSON document on `out` is the CSV run.
  std::string text = out.str();
  const auto split = text.find("\n{");
  const auto doc = nlohmann::json::parse(text.substr(split + 1));
  const double spacing = 6.0 / 240.0;
  double worst = 0.0;
  std::size_t checked = 0;
  std::size_t sets = 0;
  for (const auto& fig : doc["figures"]) {
    sets += fig["files"].size();
    if (fig["lambda"] != 0) continue;
    for (const auto& level : fig["levels"]) {
      const double value = level["level"].get<double>();
      std::ostringstream name;
      name << prefix << "_lambda_0_level_" << level["level"].dump() << ".csv";
      std::ifstream in(name.str());
      std::string line;
      std::getline(in, line);
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        const double px = std::stod(line.substr(0, comma));
        const double py = std::stod(line.substr(comma + 1));
        if (py > 0.0) continue;
        worst = std::max(worst, std::abs(px * px + py * py + value));
        ++checked;
      }
    }
  }
  std::filesystem::remove_all(dir);
  const bool ok = figures && sets > 0 && checked > 0 && worst <= 2.0 * spacing;
  return {ok, std::to_string(sets) + " contour sets, " + std::to_string(checked) +
                  " points with x·n <= 0, max ||x|²+level| " + fmt("%.3g", worst) + " (bound " +
                  fmt("%.3g", 2.0 * spacing) + ")"};
}

// 7. finite-module exactness.
Outcome finite_exactness() {
  const auto start = Clock::now();
  bool ok = true;
  for (const KernelMatrix& k : corpus()) {
    const std::size_t n = k.size();
    const std::size_t b = k.basepoint();
    const StarMatrix s = kleene_star(k);
    const testing::Dense brute = testing::brute_force_star(testing::to_dense(k.entries()), 2 * n);
    const auto objects = martin_kernel(s);
    std::vector<MaxPlusFunction> columns(n);
    for (const auto& w : objects) {
      for (std::size_t y : w.members) columns[y] = w.column;
    }
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = ok && s(x, x) == Value{0.0};
      for (std::size_t y = 0; y < n; ++y) {
        ok = ok && s(x, y).to_double() == brute[x][y];
        const double kxy = columns[y][x].finite();
        ok = ok && s(x, b).finite() <= kxy && kxy <= -s(b, x).finite();
        for (std::size_t z = 0; z < n; ++z) {
          ok = ok && otimes(s(x, z), s(z, y)) <= s(x, y);
          const double diff = columns[z][x].finite() - columns[z][y].finite();
          ok = ok && s(x, y).finite() <= diff && diff <= -s(y, x).finite();
        }
      }
    }
    if (!ok) break;
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed <= kExactnessBudget,
          std::to_string(corpus().size()) + " kernels, " + fmt("%.2f", elapsed) + " s"};
}

// 8. representation round trip and maximality.
Outcome representation() {
  std::mt19937_64 rng(808);
  bool ok = true;
  std::size_t functions = 0;
  for (const KernelMatrix& k : corpus()) {
    const StarMatrix s = kleene_star(k);
    const auto m = minimal_martin_space(s);
    ok = ok && !m.empty();
    for (int rep = 0; rep < 5 && ok; ++rep) {
      const MartinMeasure nu = testing::random_measure(m.size(), rng);
      const MaxPlusFunction h = represent(nu, m, k.size());
      const MartinMeasure mu_h = spectral_measure(h, m, s);
      ok = ok && represent(mu_h, m, k.size()) == h;
      for (std::size_t i = 0; i < m.size(); ++i) ok = ok && nu[i] <= mu_h[i];
      ++functions;
    }
    if (!ok) break;
  }
  return {ok, std::to_string(functions) + " harmonic functions"};
}

// Some split of the active terms of h into two harmonic parts, both different from h.
bool falsify(const MaxPlusFunction& h, const std::vector<MartinObject>& m, const StarMatrix& s) {
  const MartinMeasure mu_h = spectral_measure(h, m, s);
  std::vector<MaxPlusFunction> terms;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (mu_h[i].is_finite()) terms.push_back(shift(m[i].column, mu_h[i]));
  }
  const std::size_t count = terms.size();
  if (count < 2) return false;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << count); ++mask) {
    MaxPlusFunction u(h.size(), kNegInf);
    MaxPlusFunction v(h.size(), kNegInf);
    for (std::size_t i = 0; i < count; ++i) {
      MaxPlusFunction& side = (mask >> i) & 1U ? u : v;
      side = oplus(side, terms[i]);
    }
    if (u != h && v != h && oplus(u, v) == h && is_harmonic(s.source(), u) && is_harmonic(s.source(), v)) {
      return true;
    }
  }
  return false;
}

// 9. extremality equals minimality.
Outcome extremality() {
  std::mt19937_64 rng(909);
  bool ok = true;
  std::size_t extremal = 0;
  std::size_t falsified = 0;
  for (const KernelMatrix& k : corpus()) {
    const StarMatrix s = kleene_star(k);
    const auto m = minimal_martin_space(s);
    const std::size_t b = k.basepoint();
    for (const auto& w : m) ok = ok && is_extremal(w.column, m, s);
    for (const auto& w : martin_kernel(s)) {
      if (w.harmonic) ok = ok && is_extremal(w.column, m, s) == w.minimal;
    }
    std::vector<MaxPlusFunction> candidates;
    for (int rep = 0; rep < 6; ++rep) {
      const MaxPlusFunction raw = represent(testing::random_measure(m.size(), rng), m, k.size());
      candidates.push_back(shift(raw, Value{-raw[b].finite()}));
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        candidates.push_back(oplus(m[i].column, m[j].column));
        candidates.push_back(oplus(m[i].column, shift(m[j].column, Value{-1.0})));
      }
    }
    for (const MaxPlusFunction& h : candidates) {
      if (!ok) break;
      const bool is_min = std::any_of(m.begin(), m.end(), [&](const MartinObject& w) { return w.column == h; });
      const bool verdict = is_extremal(h, m, s);
      ok = ok && verdict == is_min;
      if (verdict) {
        ++extremal;
      } else {
        ok = ok && falsify(h, m, s);
        ++falsified;
      }
    }
    if (!ok) break;
  }
  return {ok && falsified > 0, std::to_string(extremal) + " extremal, " + std::to_string(falsified) +
                                   " falsified as max(u,v)"};
}

// 10. path machinery.
Outcome path_machinery() {
  std::mt19937_64 rng(1010);
  std::uniform_real_distribution<double> eps(0.05, 2.0);
  bool ok = true;
  std::size_t paths = 0;
  for (const KernelMatrix& k : corpus()) {
    const StarMatrix s = kleene_star(k);
    const auto m = minimal_martin_space(s);
    const MaxPlusFunction h = represent(testing::random_measure(m.size(), rng), m, k.size());
    for (std::size_t x0 = 0; x0 < k.size() && ok; ++x0) {
      const double e = eps(rng);
      const DiscretePath path = downhill_path(k, h, x0, e, 2 * k.size());
      ok = ok && is_almost_optimal(path, h, e, k) && is_almost_geodesic(path, e, s);
      const MartinObject limit = geodesic_limit(path, e, s);
      ok = ok && std::any_of(m.begin(), m.end(), [&](const MartinObject& w) { return w.column == limit.column; });
      ++paths;
    }
    if (!ok) break;
  }
  if (!ok) return {false, "downhill path check failed after " + std::to_string(paths) + " paths"};

  std::size_t random_paths = 0;
  std::uniform_int_distribution<std::size_t> pick(0, corpus().size() - 1);
  while (random_paths < 1000 && ok) {
    const KernelMatrix& k = corpus()[pick(rng)];
    const StarMatrix s = kleene_star(k);
    const DiscretePath path = random_path(k.size(), rng);
    for (std::size_t a = 0; a < path.size(); ++a) {
      for (std::size_t c = a; c < path.size(); ++c) {
        const Value j = geodesic_deficit(path, a, c, s);
        ok = ok && j <= Value{0.0};
        for (std::size_t u = a; u <= c; ++u) {
          ok = ok && j == otimes(geodesic_deficit(path, a, u, s), geodesic_deficit(path, u, c, s));
        }
      }
    }
    ++random_paths;
  }
  return {ok, std::to_string(paths) + " downhill paths, J checked on " + std::to_string(random_paths) +
                  " random paths"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"star kernel matches the horizon sweep", star_oracle},
      {"optimal horizon formulas", horizon_oracle},
      {"worked value A*((1,0),(2,0)) = -3", worked_value},
      {"horofunction limits", horofunction_limits},
      {"eigenfunction verification", eigenfunctions},
      {"horosphere figures", horosphere_figures},
      {"finite-module exactness", finite_exactness},
      {"representation round trip", representation},
      {"extremality equals minimality", extremality},
      {"path machinery", path_machinery},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
