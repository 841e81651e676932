#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string_view>

#include "maxplus/maxplus.hpp"

namespace maxplus::cli {

namespace {

using json = nlohmann::ordered_json;
using martin::KernelMatrix;
using lq::Vector;

struct Options {
  std::string kernel;
  std::string function;
  std::string basepoint;
  std::string start;
  std::string out;
  std::string format = "svg";
  bool normalize = false;
  double epsilon = 0.1;
  std::size_t steps = 0;

  std::string field = "horofunction";
  double lambda = 0.0;
  std::string lambdas = "0,1";
  std::string x;
  std::string y;
  std::string n = "0,1";
  std::string x0;
  double t = 1.0;
  std::string probes;
  std::size_t probe_count = 25;
  double probe_radius = 2.0;
  std::size_t dim = 0;
  double half_width = 0.0;
  double spacing = 0.01;
  double duration = 1.0;
  double step = 0.01;
  double gain = 1.0;
  std::string bbox = "-3,3,-3,3";
  std::string levels = "-4,-2,-1,-0.5,0.5,1,2,4";
  std::size_t resolution = 240;
};

// ---------------------------------------------------------------- formatting

json num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (v == 0.0) return 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  if (r == std::trunc(r) && std::abs(r) < 1e15) return static_cast<long long>(r);
  return r;
}

json num(Value v) { return num(v.to_double()); }

json vec(std::span<const double> v) {
  json a = json::array();
  for (double c : v) a.push_back(num(c));
  return a;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v == 0.0 ? 0.0 : v);
  return buf;
}

json labels(const KernelMatrix& k, const std::vector<std::size_t>& idx) {
  json a = json::array();
  for (std::size_t i : idx) a.push_back(k.states()[i]);
  return a;
}

json function_doc(const MaxPlusFunction& f, const KernelMatrix& k) {
  json o = json::object();
  for (std::size_t i = 0; i < k.size(); ++i) o[k.states()[i]] = num(f[i]);
  return o;
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + o.out + "'");
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

// ------------------------------------------------------------------- parsing

Vector parse_vector(std::string_view text, std::string_view what) {
  Vector v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string_view cell = text.substr(pos, end - pos);
    while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
    while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double d = 0.0;
    const auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), d);
    if (cell.empty() || ec != std::errc{} || p != cell.data() + cell.size() || !std::isfinite(d)) {
      throw Error(Errc::InvalidArgument,
                  std::string(what) + " expects comma-separated reals, got '" + std::string(text) + "'");
    }
    v.push_back(d);
    pos = end + 1;
  }
  return v;
}

Vector unit_direction(const Options& o, std::ostream& err) {
  Vector n = parse_vector(o.n, "--n");
  const double r = lq::norm(n);
  if (!(r > 0.0)) throw Error(Errc::InvalidArgument, "--n must be a nonzero vector");
  if (std::abs(r - 1.0) > 1e-9) {
    err << "warning: --n has norm " << label(r) << "; using n/|n|\n";
    for (double& c : n) c /= r;
  }
  return n;
}

void require_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) throw Error(Errc::InvalidArgument, "--lambda must be finite and >= 0");
}

void require_positive(double v, std::string_view what) {
  if (!std::isfinite(v) || !(v > 0.0)) throw Error(Errc::InvalidArgument, std::string(what) + " must be positive");
}

void require_dim(const Vector& v, std::size_t dim, std::string_view what) {
  if (v.size() != dim) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " has dimension " + std::to_string(v.size()) +
                                             ", expected " + std::to_string(dim));
  }
}

// ------------------------------------------------------------ finite module

struct LoadedKernel {
  KernelMatrix kernel;
  std::optional<martin::CycleMean> eigenvalue;
};

LoadedKernel load_kernel(const Options& o) {
  std::optional<std::string> base;
  if (!o.basepoint.empty()) base = o.basepoint;
  KernelMatrix k = martin::read_kernel(o.kernel, base);
  if (!o.normalize) return {std::move(k), std::nullopt};
  const martin::CycleMean m = martin::max_cycle_mean_ratio(k.entries());
  return {martin::normalize(k, m.value()), m};
}

json header(const LoadedKernel& lk) {
  json doc;
  doc["states"] = lk.kernel.states();
  doc["basepoint"] = lk.kernel.states()[lk.kernel.basepoint()];
  if (lk.eigenvalue) doc["lambda"] = num(lk.eigenvalue->value());
  return doc;
}

json martin_object_doc(const martin::MartinObject& w, const KernelMatrix& k) {
  json o;
  o["class"] = labels(k, w.members);
  o["column"] = function_doc(w.column, k);
  o["harmonic"] = w.harmonic;
  o["minimal"] = w.minimal;
  return o;
}

void cmd_star(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const martin::StarMatrix s = martin::kleene_star(lk.kernel);
  json doc = header(lk);
  json rows = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(num(s(i, j)));
    rows.push_back(std::move(row));
  }
  doc["star"] = std::move(rows);
  doc["irreducible"] = !s.assumption_violated();
  doc["diagnostics"] = s.diagnostics();
  emit(doc, o, out);
}

void cmd_eigenvalue(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const martin::CycleMean m = martin::max_cycle_mean_ratio(lk.kernel.entries());
  json doc;
  doc["states"] = lk.kernel.states();
  if (lk.eigenvalue) doc["normalized_by"] = num(lk.eigenvalue->value());
  doc["eigenvalue"] = num(m.value());
  doc["cycle"] = {{"weight", num(m.weight)}, {"length", m.length}};
  emit(doc, o, out);
}

void cmd_classes(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const martin::StarMatrix s = martin::kleene_star(lk.kernel);
  json doc = header(lk);
  json classes = json::array();
  for (const auto& c : martin::recurrence_classes(s)) classes.push_back(labels(lk.kernel, c));
  doc["classes"] = std::move(classes);
  emit(doc, o, out);
}

void cmd_martin(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const martin::StarMatrix s = martin::kleene_star(lk.kernel);
  json doc = header(lk);
  json objects = json::array();
  std::size_t minimal = 0;
  for (const auto& w : martin::martin_kernel(s)) {
    objects.push_back(martin_object_doc(w, lk.kernel));
    minimal += w.minimal ? 1 : 0;
  }
  doc["objects"] = std::move(objects);
  doc["minimal_count"] = minimal;
  emit(doc, o, out);
}

void cmd_harmonic_check(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const MaxPlusFunction h = martin::read_function(o.function, lk.kernel);
  json doc = header(lk);
  doc["harmonic"] = martin::is_harmonic(lk.kernel, h);
  doc["superharmonic"] = martin::is_superharmonic(lk.kernel, h);
  doc["image"] = function_doc(martin::apply(lk.kernel, h), lk.kernel);
  emit(doc, o, out);
}

void cmd_represent(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const MaxPlusFunction h = martin::read_function(o.function, lk.kernel);
  const martin::StarMatrix s = martin::kleene_star(lk.kernel);
  const auto minimal = martin::minimal_martin_space(s);
  const martin::MartinMeasure nu = martin::spectral_measure(h, minimal, s);
  const MaxPlusFunction back = martin::represent(nu, minimal, lk.kernel.size());
  double residual = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].kind() != back[i].kind()) {
      residual = std::numeric_limits<double>::infinity();
    } else if (h[i].is_finite()) {
      residual = std::max(residual, std::abs(h[i].finite() - back[i].finite()));
    }
  }
  json doc = header(lk);
  json measure = json::array();
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    measure.push_back({{"class", labels(lk.kernel, minimal[k].members)}, {"weight", num(nu[k])}});
  }
  doc["measure"] = std::move(measure);
  doc["reconstruction"] = function_doc(back, lk.kernel);
  doc["residual"] = num(residual);
  emit(doc, o, out);
}

void cmd_extremal(const Options& o, std::ostream& out) {
  const LoadedKernel lk = load_kernel(o);
  const MaxPlusFunction h = martin::read_function(o.function, lk.kernel);
  const martin::StarMatrix s = martin::kleene_star(lk.kernel);
  const auto minimal = martin::minimal_martin_space(s);
  json doc = header(lk);
  doc["extremal"] = martin::is_extremal(h, minimal, s);
  emit(doc, o, out);
}

void cmd_downhill(const Options& o, std::ostream& out) {
  if (!(o.epsilon > 0.0)) throw Error(Errc::InvalidArgument, "--epsilon must be positive");
  const LoadedKernel lk = load_kernel(o);
  const MaxPlusFunction h = martin::read_function(o.function, lk.kernel);
  const std::size_t x0 = lk.kernel.index_of(o.start);
  const std::size_t steps = o.steps > 0 ? o.steps : 2 * lk.kernel.size();
  const martin::StarMatrix s = martin::kleene_star(lk.kernel);
  s.require_irreducible();
  const martin::DiscretePath path = martin::downhill_path(lk.kernel, h, x0, o.epsilon, steps);

  json doc = header(lk);
  doc["epsilon"] = num(o.epsilon);
  doc["start"] = o.start;
  doc["times"] = path.times();
  doc["path"] = labels(lk.kernel, path.states());
  doc["almost_optimal"] = martin::is_almost_optimal(path, h, o.epsilon, lk.kernel);
  doc["almost_geodesic"] = martin::is_almost_geodesic(path, o.epsilon, s);
  try {
    doc["limit"] = martin_object_doc(martin::geodesic_limit(path, o.epsilon, s), lk.kernel);
  } catch (const Error& e) {
    doc["limit"] = nullptr;
    doc["limit_status"] = std::string(to_string(e.code())) + ": " + e.what();
  }
  emit(doc, o, out);
}

// ---------------------------------------------------------------- LQ module

lq::ScalarField named_field(const std::string& name, const Vector& n, double lambda) {
  if (name == "neg-quadratic") return [](std::span<const double> x) { return -lq::norm_squared(x); };
  if (name == "pos-quadratic") return [](std::span<const double> x) { return lq::norm_squared(x); };
  if (name == "horofunction") {
    return [n, lambda](std::span<const double> x) { return lq::horofunction(x, n, lambda); };
  }
  throw Error(Errc::InvalidArgument, "--function must be neg-quadratic, pos-quadratic or horofunction");
}

std::vector<Vector> make_probes(const Options& o, std::size_t dim) {
  std::vector<Vector> probes;
  if (!o.probes.empty()) {
    std::size_t pos = 0;
    while (pos <= o.probes.size()) {
      const std::size_t end = std::min(o.probes.find(';', pos), o.probes.size());
      Vector p = parse_vector(std::string_view(o.probes).substr(pos, end - pos), "--probes");
      require_dim(p, dim, "probe");
      probes.push_back(std::move(p));
      pos = end + 1;
    }
    return probes;
  }
  require_positive(o.probe_radius, "--probe-radius");
  if (o.probe_count == 0) throw Error(Errc::InvalidArgument, "--probe-count must be positive");
  const double golden = 0.6180339887498949;
  for (std::size_t k = 0; k < o.probe_count; ++k) {
    const double r = o.probe_radius * static_cast<double>(k % 4 + 1) / 4.0;
    Vector p(dim, 0.0);
    if (dim == 1) {
      p[0] = k % 2 == 0 ? r : -r;
    } else {
      const double theta = 2.0 * std::numbers::pi * golden * static_cast<double>(k);
      p[0] = r * std::cos(theta);
      p[1] = r * std::sin(theta);
    }
    probes.push_back(std::move(p));
  }
  return probes;
}

void cmd_lq_star(const Options& o, std::ostream& out) {
  require_lambda(o.lambda);
  const Vector x = parse_vector(o.x, "--x");
  const Vector y = parse_vector(o.y, "--y");
  require_dim(y, x.size(), "--y");
  const double value = lq::star_kernel(x, y, o.lambda);
  json doc;
  doc["lambda"] = num(o.lambda);
  doc["x"] = vec(x);
  doc["y"] = vec(y);
  doc["value"] = num(value);
  try {
    doc["optimal_horizon"] = num(lq::optimal_horizon(x, y, o.lambda));
  } catch (const Error& e) {
    if (e.code() != Errc::BothEndpointsZeroWithLambdaZero) throw;
    doc["optimal_horizon"] = nullptr;
  }
  emit(doc, o, out);
}

void cmd_lq_horofunction(const Options& o, std::ostream& out, std::ostream& err) {
  require_lambda(o.lambda);
  const Vector n = unit_direction(o, err);
  const Vector x = parse_vector(o.x, "--x");
  require_dim(x, n.size(), "--x");
  json doc;
  doc["lambda"] = num(o.lambda);
  doc["n"] = vec(n);
  doc["x"] = vec(x);
  doc["value"] = num(lq::horofunction(x, n, o.lambda));
  emit(doc, o, out);
}

void cmd_lq_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_lambda(o.lambda);
  require_positive(o.t, "--t");
  require_positive(o.spacing, "--spacing");
  if (o.half_width != 0.0) require_positive(o.half_width, "--half-width");
  Vector n;
  std::size_t dim = o.dim;
  if (o.field == "horofunction") {
    n = unit_direction(o, err);
    if (dim == 0) dim = n.size();
    require_dim(n, dim, "--n");
  }
  if (dim == 0) dim = 2;
  const lq::ScalarField h = named_field(o.field, n, o.lambda);
  const std::vector<Vector> probes = make_probes(o, dim);
  lq::GridSpec grid = lq::default_grid(probes);
  if (o.half_width > 0.0) grid.half_width = o.half_width;
  grid.spacing = o.spacing;
  grid.threads = lq::threads_from_environment();

  const auto reports = lq::harmonic_residuals(h, o.lambda, o.t, probes, grid);
  json doc;
  doc["function"] = o.field;
  doc["lambda"] = num(o.lambda);
  doc["t"] = num(o.t);
  if (!n.empty()) doc["n"] = vec(n);
  doc["grid"] = {{"half_width", num(grid.half_width)}, {"spacing", num(grid.spacing)}};
  double worst = 0.0;
  bool clipped = false;
  json rs = json::array();
  for (const auto& r : reports) {
    worst = std::max(worst, r.residual);
    clipped = clipped || r.clipped;
    json e;
    e["probe"] = vec(r.probe);
    e["sup"] = num(r.sup);
    e["residual"] = num(r.residual);
    e["argmax_location"] = vec(r.argmax_location);
    e["clipped"] = r.clipped;
    rs.push_back(std::move(e));
  }
  doc["max_residual"] = num(worst);
  doc["clipped"] = clipped;
  doc["reports"] = std::move(rs);
  emit(doc, o, out);
  if (clipped) {
    throw Error(Errc::GridTooSmall, "the argmax touches the grid boundary for at least one probe");
  }
}

void cmd_lq_flow(const Options& o, std::ostream& out, std::ostream& err) {
  require_lambda(o.lambda);
  require_positive(o.duration, "--duration");
  require_positive(o.step, "--step");
  if (!std::isfinite(o.gain)) throw Error(Errc::InvalidArgument, "--gain must be finite");
  const Vector x0 = parse_vector(o.x0, "--x0");
  Vector n;
  if (o.field == "horofunction") {
    n = unit_direction(o, err);
    require_dim(x0, n.size(), "--x0");
  }
  const lq::ScalarField h = named_field(o.field, n, o.lambda);
  const lq::Trajectory traj = lq::feedback_trajectory(h, x0, o.duration, o.step, o.gain);
  json doc;
  doc["function"] = o.field;
  doc["lambda"] = num(o.lambda);
  if (!n.empty()) doc["n"] = vec(n);
  doc["gain"] = num(o.gain);
  json times = json::array();
  json points = json::array();
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    times.push_back(num(traj.times[k]));
    points.push_back(vec(traj.points[k]));
  }
  doc["times"] = std::move(times);
  doc["points"] = std::move(points);
  doc["optimality_gap"] = num(lq::feedback_optimality_gap(traj, h, o.lambda));
  emit(doc, o, out);
}

void cmd_lq_horosphere(const Options& o, std::ostream& out, std::ostream& err) {
  const Vector lambdas = parse_vector(o.lambdas, "--lambda");
  for (double l : lambdas) require_lambda(l);
  const Vector n = unit_direction(o, err);
  require_dim(n, 2, "--n");
  const Vector b = parse_vector(o.bbox, "--bbox");
  if (b.size() != 4 || !(b[1] > b[0]) || !(b[3] > b[2])) {
    throw Error(Errc::InvalidArgument, "--bbox expects xmin,xmax,ymin,ymax with xmin < xmax and ymin < ymax");
  }
  const lq::BoundingBox box{b[0], b[1], b[2], b[3]};
  Vector levels = parse_vector(o.levels, "--levels");
  std::sort(levels.begin(), levels.end());
  if (o.resolution < 16) throw Error(Errc::InvalidArgument, "--resolution must be at least 16");
  if (o.format != "svg" && o.format != "csv" && o.format != "json") {
    throw Error(Errc::InvalidArgument, "--format must be svg, csv or json");
  }
  const std::string prefix = o.out.empty() ? std::string("horosphere") : o.out;

  json doc;
  doc["n"] = vec(n);
  doc["bbox"] = vec(b);
  doc["resolution"] = o.resolution;
  json figures = json::array();
  for (double lambda : lambdas) {
    const lq::ScalarField h = [&n, lambda](std::span<const double> x) { return lq::horofunction(x, n, lambda); };
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t j = 0; j <= o.resolution; ++j) {
      for (std::size_t i = 0; i <= o.resolution; ++i) {
        const double p[2] = {box.xmin + (box.xmax - box.xmin) * static_cast<double>(i) / static_cast<double>(o.resolution),
                             box.ymin + (box.ymax - box.ymin) * static_cast<double>(j) / static_cast<double>(o.resolution)};
        const double v = h(p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    json fig;
    fig["lambda"] = num(lambda);
    fig["range"] = {num(lo), num(hi)};
    json level_docs = json::array();
    json skipped = json::array();
    json files = json::array();
    std::vector<lq::LevelContours> drawn;
    for (double level : levels) {
      if (!(level > lo && level < hi)) {
        skipped.push_back(num(level));
        continue;
      }
      lq::LevelContours lc{level, lq::horosphere_contour(h, level, box, o.resolution)};
      json ld;
      ld["level"] = num(level);
      ld["polylines"] = lc.polylines.size();
      std::size_t points = 0;
      for (const auto& line : lc.polylines) points += line.size();
      ld["points"] = points;
      if (o.format == "json") {
        json lines = json::array();
        for (const auto& line : lc.polylines) {
          json pl = json::array();
          for (const auto& p : line) pl.push_back({num(p[0]), num(p[1])});
          lines.push_back(std::move(pl));
        }
        ld["contours"] = std::move(lines);
      } else if (o.format == "csv") {
        const std::string path = prefix + "_lambda_" + label(lambda) + "_level_" + label(level) + ".csv";
        write_file(path, lq::contour_csv(lc.polylines));
        files.push_back(path);
      }
      level_docs.push_back(std::move(ld));
      drawn.push_back(std::move(lc));
    }
    if (o.format == "svg") {
      const std::string path = prefix + "_lambda_" + label(lambda) + ".svg";
      const std::string title = "Horospheres, lambda = " + label(lambda) + ", n = (" + label(n[0]) + ", " +
                                label(n[1]) + ")";
      write_file(path, lq::contour_svg(drawn, box, title));
      files.push_back(path);
    }
    fig["levels"] = std::move(level_docs);
    fig["skipped_levels"] = std::move(skipped);
    if (o.format != "json") fig["files"] = std::move(files);
    figures.push_back(std::move(fig));
  }
  doc["figures"] = std::move(figures);
  out << doc.dump(2) << "\n";
}

// ------------------------------------------------------------------ errors

std::string_view assumption_hint(Errc code) {
  switch (code) {
    case Errc::NoCycle: return "the kernel must contain a cycle of finite arcs";
    case Errc::PositiveCycle: return "every cycle mean must be <= 0 (rerun with --normalize)";
    case Errc::AssumptionViolated: return "irreducibility: A*(x,y) > -inf for every pair of states";
    case Errc::NotHarmonic: return "h must be harmonic, Ah = h";
    case Errc::NotNormalized: return "h must vanish at the basepoint";
    case Errc::HMinusInfinityAtStart: return "h must be finite at the start state";
    case Errc::NotAlmostGeodesic: return "the path must be almost-geodesic";
    case Errc::NotEventuallyConstant: return "the path must settle in one recurrence class";
    case Errc::LimitNotMinimal: return "the limit must lie in the minimal Martin space";
    case Errc::GridTooSmall: return "the grid must contain the maximizer (raise --half-width)";
    case Errc::GradientSingularity: return "h must be differentiable along the trajectory";
    case Errc::EmptyContour: return "the level must be attained inside the bounding box";
    default: return {};
  }
}

int report(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what();
  if (const auto hint = assumption_hint(e.code()); !hint.empty()) err << " [assumption: " << hint << "]";
  err << "\n";
  return is_assumption_violation(e.code()) ? 2 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Max-plus Martin boundary toolkit", "maxplus"};
  app.require_subcommand(1);

  const auto kernel_opts = [&o](CLI::App* c) {
    c->add_option("--kernel", o.kernel, "Kernel file (.json or .csv)")->required()->check(CLI::ExistingFile);
    c->add_option("--basepoint", o.basepoint, "Basepoint label (overrides the file)");
    c->add_flag("--normalize", o.normalize, "Subtract the maximum cycle mean first");
    c->add_option("--out", o.out, "Write the JSON report to this file");
  };
  const auto function_opt = [&o](CLI::App* c) {
    c->add_option("--function", o.function, "Function file (JSON object label -> value)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const auto field_opt = [&o](CLI::App* c) {
    c->add_option("--function", o.field, "neg-quadratic | pos-quadratic | horofunction")
        ->check(CLI::IsMember({"neg-quadratic", "pos-quadratic", "horofunction"}));
  };

  auto* star = app.add_subcommand("star", "Kleene star with diagnostics");
  kernel_opts(star);
  auto* eigen = app.add_subcommand("eigenvalue", "Maximum cycle mean");
  kernel_opts(eigen);
  auto* classes = app.add_subcommand("classes", "Recurrence classes");
  kernel_opts(classes);
  auto* mart = app.add_subcommand("martin", "Martin columns with harmonic and minimal flags");
  kernel_opts(mart);
  auto* harm = app.add_subcommand("harmonic-check", "Harmonic and superharmonic tests for a function");
  kernel_opts(harm);
  function_opt(harm);
  auto* rep = app.add_subcommand("represent", "Spectral measure and round-trip residual");
  kernel_opts(rep);
  function_opt(rep);
  auto* ext = app.add_subcommand("extremal", "Extremality verdict for a normalized harmonic function");
  kernel_opts(ext);
  function_opt(ext);
  auto* down = app.add_subcommand("downhill", "Downhill path with optimality and geodesic checks");
  kernel_opts(down);
  function_opt(down);
  down->add_option("--start", o.start, "Start state label")->required();
  down->add_option("--epsilon", o.epsilon, "Tolerance epsilon > 0");
  down->add_option("--steps", o.steps, "Number of steps (default 2|X|)");

  auto* lstar = app.add_subcommand("lq-star", "LQ kernel A*(x,y) and its optimal horizon");
  lstar->add_option("--lambda", o.lambda, "Eigenvalue lambda >= 0");
  lstar->add_option("--x", o.x, "Start point, comma-separated")->required();
  lstar->add_option("--y", o.y, "End point, comma-separated")->required();
  lstar->add_option("--out", o.out, "Write the JSON report to this file");

  auto* lhoro = app.add_subcommand("lq-horofunction", "Horofunction h_n(x)");
  lhoro->add_option("--lambda", o.lambda, "Eigenvalue lambda >= 0");
  lhoro->add_option("--n", o.n, "Direction, comma-separated (default 0,1)");
  lhoro->add_option("--x", o.x, "Evaluation point")->required();
  lhoro->add_option("--out", o.out, "Write the JSON report to this file");

  auto* lver = app.add_subcommand("lq-verify", "Grid check of S^t h = h");
  field_opt(lver);
  lver->add_option("--lambda", o.lambda, "Eigenvalue lambda >= 0");
  lver->add_option("--t", o.t, "Time t > 0");
  lver->add_option("--n", o.n, "Direction for the horofunction");
  lver->add_option("--probes", o.probes, "Probe points 'x1,y1;x2,y2;...'");
  lver->add_option("--probe-count", o.probe_count, "Number of generated probes");
  lver->add_option("--probe-radius", o.probe_radius, "Radius of generated probes");
  lver->add_option("--dim", o.dim, "Dimension for the quadratic candidates (default 2)");
  lver->add_option("--half-width", o.half_width, "Grid half-width (default 4 max|probe|)");
  lver->add_option("--spacing", o.spacing, "Grid spacing");
  lver->add_option("--out", o.out, "Write the JSON report to this file");

  auto* lflow = app.add_subcommand("lq-flow", "Feedback trajectory x' = gain grad h");
  field_opt(lflow);
  lflow->add_option("--lambda", o.lambda, "Eigenvalue lambda >= 0");
  lflow->add_option("--n", o.n, "Direction for the horofunction");
  lflow->add_option("--x0", o.x0, "Initial point")->required();
  lflow->add_option("--duration", o.duration, "Integration horizon");
  lflow->add_option("--step", o.step, "RK4 step");
  lflow->add_option("--gain", o.gain, "Feedback gain (0.5 is the optimal control)");
  lflow->add_option("--out", o.out, "Write the JSON report to this file");

  auto* lsph = app.add_subcommand("lq-horosphere", "Level sets of h_n in the plane");
  lsph->add_option("--lambda", o.lambdas, "Comma-separated eigenvalues (default 0,1)");
  lsph->add_option("--n", o.n, "Direction (default 0,1)");
  lsph->add_option("--bbox", o.bbox, "xmin,xmax,ymin,ymax (default -3,3,-3,3)");
  lsph->add_option("--levels", o.levels, "Comma-separated levels");
  lsph->add_option("--resolution", o.resolution, "Cells per side");
  lsph->add_option("--format", o.format, "svg | csv | json")->check(CLI::IsMember({"svg", "csv", "json"}));
  lsph->add_option("--out", o.out, "File name prefix (default 'horosphere')");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("maxplus");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: InvalidArgument: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*star) cmd_star(o, out);
    else if (*eigen) cmd_eigenvalue(o, out);
    else if (*classes) cmd_classes(o, out);
    else if (*mart) cmd_martin(o, out);
    else if (*harm) cmd_harmonic_check(o, out);
    else if (*rep) cmd_represent(o, out);
    else if (*ext) cmd_extremal(o, out);
    else if (*down) cmd_downhill(o, out);
    else if (*lstar) cmd_lq_star(o, out);
    else if (*lhoro) cmd_lq_horofunction(o, out, err);
    else if (*lver) cmd_lq_verify(o, out, err);
    else if (*lflow) cmd_lq_flow(o, out, err);
    else if (*lsph) cmd_lq_horosphere(o, out, err);
  } catch (const Error& e) {
    return report(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace maxplus::cli
