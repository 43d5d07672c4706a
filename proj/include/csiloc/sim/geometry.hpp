#pragma once

#include <cmath>
#include <vector>

#include "csiloc/core/errors.hpp"

namespace csiloc::sim {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Axis-aligned rectangle in the horizontal plane.
struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  bool contains(double x, double y) const {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
  Rect expanded(double margin) const {
    return {x0 - margin, y0 - margin, x1 + margin, y1 + margin};
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

struct Vec2 {
  double x = 0.0, y = 0.0;
};

/// 2D segment intersection including touching and collinear overlap, used
/// for pedestrian blockage tests.
inline bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
  };
  auto on_segment = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

/// Rectangular patch array. Elements are spaced `element_spacing` apart,
/// spread along y (columns) and z (rows) around `origin`, facing +x.
struct ArrayGeometry {
  int rows = 8;
  int cols = 8;
  double element_spacing = 0.0;  // meters; defaults to lambda/2 at preset build
  Vec3 origin{0.0, 0.0, 2.0};

  int n_antennas() const { return rows * cols; }

  /// Antenna index m = row * cols + col.
  Vec3 element_position(int m) const {
    require(m >= 0 && m < n_antennas(), "antenna index out of range");
    const int r = m / cols;
    const int c = m % cols;
    return {origin.x, origin.y + (c - 0.5 * (cols - 1)) * element_spacing,
            origin.z + (r - 0.5 * (rows - 1)) * element_spacing};
  }

  void validate() const {
    require(rows >= 1 && cols >= 1, "array must have at least one element");
    require(element_spacing > 0.0, "element spacing must be positive");
  }
};

/// Number of inclusive-endpoint grid points along a span of given length.
inline int grid_points_per_axis(double length, double spacing) {
  require(spacing > 0.0, "grid spacing must be positive");
  if (length < 0.0) return 1;
  return static_cast<int>(std::floor(length / spacing + 1e-9)) + 1;
}

struct GridLayout {
  int rows = 0;  // along y
  int cols = 0;  // along x
  int count() const { return rows * cols; }

  /// Meander ordering: row 0 walks +x, row 1 walks -x, and so on.
  void index_to_rc(int i, int& r, int& c) const {
    r = i / cols;
    c = i % cols;
    if (r % 2 == 1) c = cols - 1 - c;
  }
};

inline GridLayout grid_layout(const Rect& area, double spacing) {
  return {grid_points_per_axis(area.height(), spacing),
          grid_points_per_axis(area.width(), spacing)};
}

/// Samples `area` on a regular grid in meander order at a fixed UE height.
/// Endpoints are inclusive; a spacing larger than the area yields the single
/// corner point.
inline std::vector<Vec3> grid_sample(const Rect& area, double spacing, double ue_height) {
  const GridLayout g = grid_layout(area, spacing);
  std::vector<Vec3> points;
  points.reserve(static_cast<size_t>(g.count()));
  for (int i = 0; i < g.count(); ++i) {
    int r = 0, c = 0;
    g.index_to_rc(i, r, c);
    points.push_back({area.x0 + c * spacing, area.y0 + r * spacing, ue_height});
  }
  return points;
}

}  // namespace csiloc::sim
