#include "strkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "strkit/error.hpp"

namespace strkit::geometry {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
}  // namespace

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }

double canonical_angle(double angle) {
  // Rectangles repeat with period pi.
  double a = std::fmod(angle, kPi);
  if (a > kHalfPi) a -= kPi;
  if (a <= -kHalfPi) a += kPi;
  return a;
}

RotatedBox canonicalize(const RotatedBox& b) {
  RotatedBox out = b;
  out.angle = canonical_angle(b.angle);
  return out;
}

std::array<Point, 4> corners(const RotatedBox& b) {
  const double c = std::cos(b.angle);
  const double s = std::sin(b.angle);
  const Point u{c, s};        // along width
  const Point v{-s, c};       // along height
  const Point hw = u * (b.w / 2.0);
  const Point hh = v * (b.h / 2.0);
  const Point ctr = b.center();
  return {ctr - hw - hh, ctr + hw - hh, ctr + hw + hh, ctr - hw + hh};
}

bool is_valid(const RotatedBox& b) {
  return std::isfinite(b.cx) && std::isfinite(b.cy) && std::isfinite(b.w) &&
         std::isfinite(b.h) && std::isfinite(b.angle) && b.w >= 0.0 && b.h >= 0.0;
}

double polygon_area(const std::vector<Point>& poly) {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += cross(p, q);
  }
  return std::abs(twice) / 2.0;
}

namespace {

double signed_area2(const std::vector<Point>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  }
  return twice;
}

Point line_intersection(Point a, Point b, Point p, Point q) {
  // Intersection of infinite lines (a,b) and (p,q); caller guarantees they
  // are not parallel.
  const Point r = b - a;
  const Point s = q - p;
  const double denom = cross(r, s);
  const double t = cross(p - a, s) / denom;
  return a + r * t;
}

}  // namespace

std::vector<Point> clip_convex(const std::vector<Point>& subject,
                               const std::vector<Point>& clip) {
  if (subject.empty() || clip.size() < 3) return {};
  std::vector<Point> clipper = clip;
  if (signed_area2(clipper) < 0.0) std::reverse(clipper.begin(), clipper.end());

  std::vector<Point> output = subject;
  for (std::size_t i = 0; i < clipper.size() && !output.empty(); ++i) {
    const Point a = clipper[i];
    const Point b = clipper[(i + 1) % clipper.size()];
    const Point edge = b - a;
    std::vector<Point> input;
    input.swap(output);
    output.reserve(input.size() + 4);
    for (std::size_t j = 0; j < input.size(); ++j) {
      const Point cur = input[j];
      const Point nxt = input[(j + 1) % input.size()];
      const bool cur_in = cross(edge, cur - a) >= 0.0;
      const bool nxt_in = cross(edge, nxt - a) >= 0.0;
      if (cur_in) {
        output.push_back(cur);
        if (!nxt_in) output.push_back(line_intersection(a, b, cur, nxt));
      } else if (nxt_in) {
        output.push_back(line_intersection(a, b, cur, nxt));
      }
    }
  }
  return output;
}

double intersection_area(const RotatedBox& a, const RotatedBox& b) {
  if (a.area() <= 0.0 || b.area() <= 0.0) return 0.0;
  const auto ca = corners(a);
  const auto cb = corners(b);
  const std::vector<Point> pa(ca.begin(), ca.end());
  const std::vector<Point> pb(cb.begin(), cb.end());
  return polygon_area(clip_convex(pa, pb));
}

double iou(const RotatedBox& a, const RotatedBox& b) {
  const double area_a = a.area();
  const double area_b = b.area();
  if (area_a <= 0.0 || area_b <= 0.0) return 0.0;
  const double inter = intersection_area(a, b);
  const double uni = area_a + area_b - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double iou(const AxisRect& a, const AxisRect& b) {
  const double area_a = a.area();
  const double area_b = b.area();
  if (area_a <= 0.0 || area_b <= 0.0) return 0.0;
  const double iw = std::min(a.right(), b.right()) - std::max(a.left, b.left);
  const double ih = std::min(a.bottom(), b.bottom()) - std::max(a.top, b.top);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  const double uni = area_a + area_b - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

RotatedBox expand(const RotatedBox& b, double r_v, double r_h) {
  RotatedBox out = b;
  out.w = b.w * (1.0 + 2.0 * r_h);
  out.h = b.h * (1.0 + 2.0 * r_v);
  return out;
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  if (points.empty()) throw invariant_error("empty point set");
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const Point& a, const Point& b) {
                             return a.x == b.x && a.y == b.y;
                           }),
               points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  // Monotone chain; strict turns only, so collinear interior points drop out.
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace {

// Bounding rectangle of `points` with one side along direction `dir`
// (unit vector). Returns the box; `out_area` gets its area.
RotatedBox rect_at_direction(const std::vector<Point>& points, Point dir, double* out_area) {
  const Point perp{-dir.y, dir.x};
  double lo_u = std::numeric_limits<double>::infinity();
  double hi_u = -std::numeric_limits<double>::infinity();
  double lo_v = std::numeric_limits<double>::infinity();
  double hi_v = -std::numeric_limits<double>::infinity();
  for (const Point& p : points) {
    const double u = dot(p, dir);
    const double v = dot(p, perp);
    lo_u = std::min(lo_u, u);
    hi_u = std::max(hi_u, u);
    lo_v = std::min(lo_v, v);
    hi_v = std::max(hi_v, v);
  }
  const double w = hi_u - lo_u;
  const double h = hi_v - lo_v;
  const double cu = (lo_u + hi_u) / 2.0;
  const double cv = (lo_v + hi_v) / 2.0;
  RotatedBox box;
  box.cx = dir.x * cu + perp.x * cv;
  box.cy = dir.y * cu + perp.y * cv;
  box.w = w;
  box.h = h;
  box.angle = std::atan2(dir.y, dir.x);
  *out_area = w * h;
  return canonicalize(box);
}

// Tie-break for equal-area candidates: smaller |angle| wins, then the
// positive angle.
bool better_angle(double candidate, double best) {
  const double ca = std::abs(candidate);
  const double ba = std::abs(best);
  if (ca != ba) return ca < ba;
  return candidate > best;
}

}  // namespace

RotatedBox min_area_rect(const std::vector<Point>& points) {
  const std::vector<Point> hull = convex_hull(points);

  if (hull.size() == 1) {
    return RotatedBox{hull[0].x, hull[0].y, 0.0, 0.0, 0.0};
  }
  if (hull.size() == 2) {
    const Point d = hull[1] - hull[0];
    const double len = norm(d);
    RotatedBox box;
    box.cx = (hull[0].x + hull[1].x) / 2.0;
    box.cy = (hull[0].y + hull[1].y) / 2.0;
    box.w = len;
    box.h = 0.0;
    box.angle = std::atan2(d.y, d.x);
    box = canonicalize(box);
    // Keep w along the segment after canonicalization.
    return box;
  }

  // Rotating-calipers property: some edge of the hull is collinear with one
  // side of the optimal rectangle, so trying every hull edge is exact.
  RotatedBox best;
  double best_area = std::numeric_limits<double>::infinity();
  bool have = false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point e = hull[(i + 1) % hull.size()] - hull[i];
    const double len = norm(e);
    if (len == 0.0) continue;
    const Point dir{e.x / len, e.y / len};
    double area = 0.0;
    RotatedBox cand = rect_at_direction(hull, dir, &area);
    constexpr double kRelTie = 1e-12;
    if (!have || area < best_area * (1.0 - kRelTie)) {
      best = cand;
      best_area = area;
      have = true;
    } else if (area <= best_area * (1.0 + kRelTie) && better_angle(cand.angle, best.angle)) {
      best = cand;
      best_area = std::min(best_area, area);
    }
  }
  return best;
}

AxisRect aabb(const RotatedBox& b) {
  const auto cs = corners(b);
  double min_x = cs[0].x, max_x = cs[0].x, min_y = cs[0].y, max_y = cs[0].y;
  for (const Point& p : cs) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  return AxisRect{min_y, min_x, max_y - min_y, max_x - min_x};
}

AxisRect bounding_rect(const std::vector<Point>& points) {
  if (points.empty()) throw invariant_error("empty point set");
  double min_x = points[0].x, max_x = points[0].x;
  double min_y = points[0].y, max_y = points[0].y;
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  return AxisRect{min_y, min_x, max_y - min_y, max_x - min_x};
}

RotatedBox to_rotated(const AxisRect& r) {
  return RotatedBox{r.left + r.width / 2.0, r.top + r.height / 2.0, r.width, r.height, 0.0};
}

}  // namespace strkit::geometry
