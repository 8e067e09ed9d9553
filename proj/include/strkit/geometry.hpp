#pragma once

#include <array>
#include <vector>

namespace strkit::geometry {

// Image-frame coordinates: origin top-left, x grows right, y grows down.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point a);

// Oriented rectangle. `w` is the dimension along the angle direction, i.e.
// the unit vector (cos angle, sin angle); `h` is the perpendicular dimension.
// The canonical angle lives in (-pi/2, pi/2]; the same point set is also
// representable with w/h swapped and the angle shifted by pi/2.
struct RotatedBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;
  double angle = 0.0;  // radians

  Point center() const { return {cx, cy}; }
  double area() const { return w * h; }
};

struct AxisRect {
  double top = 0.0;
  double left = 0.0;
  double height = 0.0;
  double width = 0.0;

  double bottom() const { return top + height; }
  double right() const { return left + width; }
  double area() const { return width * height; }
};

// Wraps an angle into (-pi/2, pi/2].
double canonical_angle(double angle);

// Returns the box with its angle canonicalized (point set unchanged).
RotatedBox canonicalize(const RotatedBox& b);

// Corner order: (-w/2,-h/2), (+w/2,-h/2), (+w/2,+h/2), (-w/2,+h/2) in the
// box local frame.
std::array<Point, 4> corners(const RotatedBox& b);

// True when all fields are finite and w, h >= 0 (degenerate zero-area boxes
// are valid inputs to iou and aabb).
bool is_valid(const RotatedBox& b);

// Intersection of two convex polygons (Sutherland-Hodgman). Both inputs must
// be convex; vertex order of either may be CW or CCW.
std::vector<Point> clip_convex(const std::vector<Point>& subject,
                               const std::vector<Point>& clip);

double polygon_area(const std::vector<Point>& poly);

double intersection_area(const RotatedBox& a, const RotatedBox& b);

// Intersection area / union area in [0, 1]. Degenerate (zero-area) inputs
// give 0.
double iou(const RotatedBox& a, const RotatedBox& b);

double iou(const AxisRect& a, const AxisRect& b);

// Grows the box about its center along its own axes: the new width is
// w * (1 + 2*r_h) and the new height h * (1 + 2*r_v).
RotatedBox expand(const RotatedBox& b, double r_v, double r_h);

// Convex hull starting at the lexicographically smallest point, ordered
// counter-clockwise in the shoelace sense (positive signed area); no
// collinear interior points. Throws on an empty input. Collinear inputs
// collapse to 2 points, coincident to 1.
std::vector<Point> convex_hull(std::vector<Point> points);

// Smallest-area oriented rectangle covering all points (rotating calipers).
// Area ties are broken by the smaller canonical |angle|, then the positive
// angle. Throws on an empty input.
RotatedBox min_area_rect(const std::vector<Point>& points);

// Tightest axis-aligned rectangle covering the box corners.
AxisRect aabb(const RotatedBox& b);

AxisRect bounding_rect(const std::vector<Point>& points);

RotatedBox to_rotated(const AxisRect& r);

}  // namespace strkit::geometry
