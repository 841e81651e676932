#include "maxplus/lq/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "maxplus/error.hpp"

namespace maxplus::lq {

namespace {

struct Segment {
  std::size_t a;
  std::size_t b;
};

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

class Lattice {
 public:
  Lattice(const ScalarField& h, const BoundingBox& box, std::size_t n) : box_(box), n_(n), f_((n + 1) * (n + 1)) {
    dx_ = (box.xmax - box.xmin) / static_cast<double>(n);
    dy_ = (box.ymax - box.ymin) / static_cast<double>(n);
    std::array<double, 2> p{};
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n; ++i) {
        p = {x(i), y(j)};
        f_[j * (n + 1) + i] = h(p);
      }
    }
  }

  double x(std::size_t i) const { return i == n_ ? box_.xmax : box_.xmin + static_cast<double>(i) * dx_; }
  double y(std::size_t j) const { return j == n_ ? box_.ymax : box_.ymin + static_cast<double>(j) * dy_; }
  double f(std::size_t i, std::size_t j) const { return f_[j * (n_ + 1) + i]; }

  std::size_t horizontal_edges() const { return n_ * (n_ + 1); }
  // Edge from (i,j) to (i+1,j).
  std::size_t h_edge(std::size_t i, std::size_t j) const { return j * n_ + i; }
  // Edge from (i,j) to (i,j+1).
  std::size_t v_edge(std::size_t i, std::size_t j) const { return horizontal_edges() + i * n_ + j; }

  Point2 crossing(std::size_t edge, double level) const {
    std::size_t i0 = 0, j0 = 0, i1 = 0, j1 = 0;
    if (edge < horizontal_edges()) {
      j0 = j1 = edge / n_;
      i0 = edge % n_;
      i1 = i0 + 1;
    } else {
      const std::size_t e = edge - horizontal_edges();
      i0 = i1 = e / n_;
      j0 = e % n_;
      j1 = j0 + 1;
    }
    const double f0 = f(i0, j0);
    const double f1 = f(i1, j1);
    double t = f1 != f0 ? (level - f0) / (f1 - f0) : 0.5;
    t = std::clamp(t, 0.0, 1.0);
    return {x(i0) + t * (x(i1) - x(i0)), y(j0) + t * (y(j1) - y(j0))};
  }

 private:
  BoundingBox box_;
  std::size_t n_;
  double dx_ = 0.0;
  double dy_ = 0.0;
  std::vector<double> f_;
};

std::vector<Segment> march(const Lattice& lat, std::size_t n, double level) {
  std::vector<Segment> segments;
  const auto above = [&](std::size_t i, std::size_t j) { return lat.f(i, j) > level; };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool a0 = above(i, j);
      const bool a1 = above(i + 1, j);
      const bool a2 = above(i + 1, j + 1);
      const bool a3 = above(i, j + 1);
      const std::size_t bottom = lat.h_edge(i, j);
      const std::size_t right = lat.v_edge(i + 1, j);
      const std::size_t top = lat.h_edge(i, j + 1);
      const std::size_t left = lat.v_edge(i, j);

      std::vector<std::size_t> crossed;
      if (a0 != a1) crossed.push_back(bottom);
      if (a1 != a2) crossed.push_back(right);
      if (a2 != a3) crossed.push_back(top);
      if (a3 != a0) crossed.push_back(left);

      if (crossed.size() == 2) {
        segments.push_back({crossed[0], crossed[1]});
      } else if (crossed.size() == 4) {
        const double centre = 0.25 * (lat.f(i, j) + lat.f(i + 1, j) + lat.f(i + 1, j + 1) + lat.f(i, j + 1));
        // Corners that disagree with the centre are cut off on their own.
        const bool centre_above = centre > level;
        if (a0 != centre_above) segments.push_back({left, bottom});
        if (a1 != centre_above) segments.push_back({bottom, right});
        if (a2 != centre_above) segments.push_back({right, top});
        if (a3 != centre_above) segments.push_back({top, left});
      }
    }
  }
  return segments;
}

std::vector<Polyline> chain(const Lattice& lat, const std::vector<Segment>& segments, double level) {
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].a].push_back(s);
    incident[segments[s].b].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  std::map<std::size_t, Point2> points;
  const auto point_of = [&](std::size_t edge) {
    auto it = points.find(edge);
    if (it == points.end()) it = points.emplace(edge, lat.crossing(edge, level)).first;
    return it->second;
  };

  std::vector<Polyline> out;
  const auto walk = [&](std::size_t start) {
    Polyline line{point_of(start)};
    std::size_t edge = start;
    for (;;) {
      std::size_t next_segment = segments.size();
      for (std::size_t s : incident[edge]) {
        if (!used[s]) {
          next_segment = s;
          break;
        }
      }
      if (next_segment == segments.size()) break;
      used[next_segment] = true;
      const Segment& seg = segments[next_segment];
      edge = seg.a == edge ? seg.b : seg.a;
      line.push_back(point_of(edge));
    }
    out.push_back(std::move(line));
  };

  for (const auto& [edge, segs] : incident) {
    if (segs.size() == 1 && !used[segs.front()]) walk(edge);
  }
  for (const auto& [edge, segs] : incident) {
    if (std::any_of(segs.begin(), segs.end(), [&](std::size_t s) { return !used[s]; })) walk(edge);
  }
  return out;
}

}  // namespace

std::vector<Polyline> horosphere_contour(const ScalarField& h, double level, const BoundingBox& box,
                                         std::size_t resolution) {
  if (resolution < 16) throw Error(Errc::InvalidArgument, "contour resolution must be at least 16");
  if (!(box.xmax > box.xmin) || !(box.ymax > box.ymin)) throw Error(Errc::InvalidArgument, "empty bounding box");
  const Lattice lattice(h, box, resolution);
  const std::vector<Segment> segments = march(lattice, resolution, level);
  if (segments.empty()) {
    throw Error(Errc::EmptyContour, "level " + number(level) + " is not attained inside the bounding box");
  }
  return chain(lattice, segments, level);
}

std::string contour_csv(const std::vector<Polyline>& polylines) {
  std::ostringstream os;
  os << "x,y\n";
  for (std::size_t k = 0; k < polylines.size(); ++k) {
    if (k > 0) os << '\n';
    for (const auto& p : polylines[k]) os << number(p[0]) << ',' << number(p[1]) << '\n';
  }
  return os.str();
}

std::string contour_svg(const std::vector<LevelContours>& levels, const BoundingBox& box, const std::string& title) {
  const double w = box.xmax - box.xmin;
  const double h = box.ymax - box.ymin;
  const double stroke = 0.004 * std::max(w, h);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"" << number(600.0 * h / w)
     << "\" viewBox=\"" << number(box.xmin) << ' ' << number(-box.ymax) << ' ' << number(w) << ' ' << number(h)
     << "\">\n"
     << "  <title>" << title << "</title>\n"
     << "  <rect x=\"" << number(box.xmin) << "\" y=\"" << number(-box.ymax) << "\" width=\"" << number(w)
     << "\" height=\"" << number(h) << "\" fill=\"white\"/>\n";
  for (const auto& lc : levels) {
    const char* colour = lc.level < 0.0 ? "#1f4e9c" : (lc.level > 0.0 ? "#b8321f" : "#000000");
    os << "  <g data-level=\"" << number(lc.level) << "\" fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"" << number(stroke) << "\">\n";
    for (const auto& line : lc.polylines) {
      os << "    <path d=\"";
      for (std::size_t k = 0; k < line.size(); ++k) {
        os << (k == 0 ? "M" : " L") << number(line[k][0]) << ',' << number(-line[k][1]);
      }
      os << "\"/>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace maxplus::lq
