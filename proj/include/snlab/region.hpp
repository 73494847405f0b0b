#pragma once

// Compact planar regions and exact lattice-point counting. Polygons carry
// rational vertices and are counted by an exact scan-line sweep (closed-set
// convention: boundary points are inside). Star-shaped radial regions are
// counted approximately by per-ray radius comparison.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "snlab/intlinalg.hpp"
#include "snlab/numeric.hpp"

namespace snlab {

using Rat = boost::rational<Int>;

inline Rat rat_of(long long num, long long den = 1) { return Rat(Int(num), Int(den)); }

inline Int rat_floor(const Rat& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) q -= 1;
  return q;
}
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

struct RatPoint {
  Rat x, y;
  bool operator==(const RatPoint&) const = default;
};

// star-shaped region: primitive integer ray directions with positive radii
struct RadialRegion {
  std::vector<std::pair<std::pair<long long, long long>, double>> rays;
};

struct PlanarRegion {
  std::vector<RatPoint> polygon;  // simple, possibly non-convex; empty if radial
  std::optional<RadialRegion> radial;

  bool is_polygon() const { return !polygon.empty(); }
};

namespace detail {

inline Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
  if (cross(a, b, p) != Rat(0)) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool segments_properly_intersect(const RatPoint& a, const RatPoint& b,
                                        const RatPoint& c, const RatPoint& d) {
  Rat d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  auto sgn = [](const Rat& r) { return r < Rat(0) ? -1 : (r > Rat(0) ? 1 : 0); };
  return sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0;
}

}  // namespace detail

inline void validate_polygon(const std::vector<RatPoint>& poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i)
    if (poly[i] == poly[(i + 1) % n])
      throw std::invalid_argument("polygon has a repeated consecutive vertex");
  // simplicity: no proper crossing, no vertex interior to a non-adjacent edge
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (detail::segments_properly_intersect(poly[i], poly[(i + 1) % n], poly[j],
                                              poly[(j + 1) % n]))
        throw std::invalid_argument("polygon is self-intersecting");
    }
  // non-degenerate area
  Rat twice_area(0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    twice_area += p.x * q.y - q.x * p.y;
  }
  if (twice_area == Rat(0)) throw std::invalid_argument("polygon has zero area");
}

// exact area by the shoelace formula
inline Rat polygon_area(const std::vector<RatPoint>& poly) {
  Rat twice(0);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  if (twice < Rat(0)) twice = -twice;
  return twice / Rat(2);
}

// Exact number of integer points in the closed region t * polygon.
// Scan-line over integer rows: even-odd crossings with a half-open edge
// convention give the interior; boundary lattice points are added
// explicitly (closed-set convention).
inline long long lattice_count_polygon(const std::vector<RatPoint>& poly_in, const Rat& t) {
  if (t <= Rat(0)) throw std::invalid_argument("scale factor must be positive");
  validate_polygon(poly_in);
  std::vector<RatPoint> poly(poly_in);
  for (auto& p : poly) {
    p.x *= t;
    p.y *= t;
  }
  const std::size_t n = poly.size();
  Rat ymin = poly[0].y, ymax = poly[0].y;
  for (const auto& p : poly) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  long long count = 0;
  for (Int yi = rat_ceil(ymin); yi <= rat_floor(ymax); ++yi) {
    Rat y(yi, Int(1));
    // parity crossings (half-open in y) and boundary coverage
    std::vector<Rat> crossings;
    std::vector<std::pair<Rat, Rat>> boundary_spans;  // closed x-intervals on this row
    for (std::size_t i = 0; i < n; ++i) {
      const RatPoint& a = poly[i];
      const RatPoint& b = poly[(i + 1) % n];
      if (a.y == b.y) {
        if (a.y == y) boundary_spans.push_back({std::min(a.x, b.x), std::max(a.x, b.x)});
        continue;
      }
      Rat lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
      if (lo <= y && y < hi) {
        Rat x = a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
        crossings.push_back(x);
        boundary_spans.push_back({x, x});  // the crossing point is on the boundary
      } else if (y == hi) {  // endpoint excluded from parity, still boundary
        Rat x = a.y > b.y ? a.x : b.x;
        boundary_spans.push_back({x, x});
      }
    }
    std::sort(crossings.begin(), crossings.end());
    // integers strictly inside the parity intervals
    for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
      Int lo = rat_floor(crossings[k]) + 1;
      Int hi = rat_ceil(crossings[k + 1]) - 1;
      if (hi >= lo) count += static_cast<long long>(hi - lo + 1);
    }
    // boundary integers not already counted strictly inside
    std::vector<Int> boundary_pts;
    for (const auto& [lo, hi] : boundary_spans)
      for (Int x = rat_ceil(lo); x <= rat_floor(hi); ++x) boundary_pts.push_back(x);
    std::sort(boundary_pts.begin(), boundary_pts.end());
    boundary_pts.erase(std::unique(boundary_pts.begin(), boundary_pts.end()),
                       boundary_pts.end());
    for (const Int& x : boundary_pts) {
      bool inside_open = false;
      for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
        Rat xr(x, Int(1));
        if (crossings[k] < xr && xr < crossings[k + 1]) {
          inside_open = true;
          break;
        }
      }
      if (!inside_open) ++count;
    }
  }
  return count;
}

// approximate count for a star-shaped radial region: linear interpolation
// of the radius between grid rays
inline long long lattice_count_radial(const RadialRegion& region, double t) {
  if (region.rays.size() < 3) throw std::invalid_argument("radial region needs >= 3 rays");
  std::vector<std::pair<double, double>> polar;  // (angle, radius)
  double rmax = 0;
  for (const auto& [dir, rad] : region.rays) {
    if (rad <= 0) throw std::invalid_argument("radial region radius must be positive");
    polar.push_back({std::atan2(static_cast<double>(dir.second), static_cast<double>(dir.first)), rad});
    rmax = std::max(rmax, rad);
  }
  std::sort(polar.begin(), polar.end());
  // pad with wrapped copies so every angle falls in an interior interval
  std::vector<std::pair<double, double>> wrapped;
  wrapped.push_back({polar.back().first - 2 * M_PI, polar.back().second});
  wrapped.insert(wrapped.end(), polar.begin(), polar.end());
  wrapped.push_back({polar.front().first + 2 * M_PI, polar.front().second});
  auto radius_at = [&](double theta) {
    auto it = std::lower_bound(wrapped.begin(), wrapped.end(), std::make_pair(theta, -1.0));
    if (it == wrapped.begin()) ++it;
    if (it == wrapped.end()) --it;
    double a0 = (it - 1)->first, r0 = (it - 1)->second;
    double a1 = it->first, r1 = it->second;
    double w = a1 == a0 ? 0.0 : (theta - a0) / (a1 - a0);
    return r0 + w * (r1 - r0);
  };
  long long bound = static_cast<long long>(std::ceil(t * rmax)) + 1;
  long long count = 0;
  for (long long x = -bound; x <= bound; ++x)
    for (long long y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) {
        ++count;
        continue;
      }
      double r = std::hypot(static_cast<double>(x), static_cast<double>(y));
      double theta = std::atan2(static_cast<double>(y), static_cast<double>(x));
      if (r <= t * radius_at(theta)) ++count;
    }
  return count;
}

inline long long lattice_count(const PlanarRegion& region, const Rat& t) {
  if (region.is_polygon()) return lattice_count_polygon(region.polygon, t);
  if (region.radial)
    return lattice_count_radial(*region.radial,
                                boost::rational_cast<double>(t));
  throw std::invalid_argument("empty planar region");
}

// lattice points on the boundary of an integer polygon (for Pick's theorem
// checks): sum of gcd(|dx|, |dy|) over edges
inline long long boundary_lattice_points(const std::vector<RatPoint>& poly) {
  long long b = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    Rat dx = q.x - p.x, dy = q.y - p.y;
    if (dx.denominator() != 1 || dy.denominator() != 1)
      throw std::invalid_argument("boundary_lattice_points requires integer vertices");
    Int g = boost::multiprecision::gcd(abs(dx.numerator()), abs(dy.numerator()));
    b += static_cast<long long>(g);
  }
  return b;
}

}  // namespace snlab
