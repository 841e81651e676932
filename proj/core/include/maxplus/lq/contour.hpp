#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "maxplus/lq/harmonic.hpp"

namespace maxplus::lq {

struct BoundingBox {
  double xmin = -3.0;
  double xmax = 3.0;
  double ymin = -3.0;
  double ymax = 3.0;
};

using Point2 = std::array<double, 2>;
using Polyline = std::vector<Point2>;

/// Level set {x : h(x) = level} of a planar function by marching squares on a
/// (resolution+1)² lattice, with linear interpolation along cell edges and the
/// cell-centre average deciding saddle cells. Open polylines (ending on the
/// box boundary) come first, then closed loops (first point repeated at the
/// end); within each group chains start from the lowest lattice edge.
/// Throws InvalidArgument for resolution < 16 or an empty box, EmptyContour if
/// the level is not crossed anywhere on the lattice.
std::vector<Polyline> horosphere_contour(const ScalarField& h, double level, const BoundingBox& box,
                                         std::size_t resolution);

struct LevelContours {
  double level = 0.0;
  std::vector<Polyline> polylines;
};

/// "x,y" header, then one block per polyline separated by blank lines.
std::string contour_csv(const std::vector<Polyline>& polylines);

/// Standalone SVG whose viewBox is the bounding box (y pointing up), one
/// <path> per polyline.
std::string contour_svg(const std::vector<LevelContours>& levels, const BoundingBox& box,
                        const std::string& title);

}  // namespace maxplus::lq
