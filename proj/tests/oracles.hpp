#pragma once

// Test-only oracles, independent of the implementation paths they check:
// brute-force conjugacy enumeration, naive point-in-polygon counting, a
// boundary lattice-point counter, and random lattice polygon generation.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "snlab/enumeration.hpp"
#include "snlab/region.hpp"
#include "snlab/surface.hpp"
#include "snlab/word.hpp"

namespace snlab::oracle {

// every freely reduced word up to max_len letters; cyclically reduced ones
// are canonicalized and kept when the geodesic length is within T
inline std::set<std::string> brute_force_classes(const HyperbolicSurface& s, double T,
                                                 int max_len) {
  SurfaceRelator rel(s.genus);
  std::set<std::string> out;
  std::vector<Letter> alphabet;
  for (int g = 0; g < 2 * s.genus; ++g) {
    alphabet.push_back(static_cast<Letter>(2 * g));
    alphabet.push_back(static_cast<Letter>(2 * g + 1));
  }
  Letters word;
  std::vector<Mat2> mats;
  auto rec = [&](auto&& self) -> void {
    if (!word.empty() && word.back() != letter_inverse(word.front())) {
      double tr = std::abs(mats.back().trace());
      if (tr > 2.0 + 1e-9 && len_le(trace_to_length(tr), T)) {
        Word cw{rel.canonical(word)};
        if (!cw.empty() && len_le(word_geodesic_length(s, cw), T)) out.insert(cw.str());
      }
    }
    if (static_cast<int>(word.size()) >= max_len) return;
    for (Letter l : alphabet) {
      if (!word.empty() && l == letter_inverse(word.back())) continue;
      const Mat2& gen = s.generators[letter_generator(l)];
      Mat2 m = letter_is_inverse(l) ? gen.inverse() : gen;
      mats.push_back(word.empty() ? m : mats.back() * m);
      word.push_back(l);
      self(self);
      word.pop_back();
      mats.pop_back();
    }
  };
  rec(rec);
  return out;
}

// winding-number point-in-polygon on rationals, boundary counted inside
inline bool point_in_closed_polygon(const std::vector<RatPoint>& poly, const Rat& px,
                                    const Rat& py) {
  const std::size_t n = poly.size();
  RatPoint p{px, py};
  for (std::size_t i = 0; i < n; ++i)
    if (detail::on_segment(p, poly[i], poly[(i + 1) % n])) return true;
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = poly[i];
    const RatPoint& b = poly[(i + 1) % n];
    if ((a.y <= py) != (b.y <= py)) {
      // x coordinate of the edge at height py
      Rat x = a.x + (b.x - a.x) * (py - a.y) / (b.y - a.y);
      if (px < x) inside = !inside;
    }
  }
  return inside;
}

// naive double-loop count over the bounding box of t * poly
inline long long naive_lattice_count(const std::vector<RatPoint>& poly_in, const Rat& t) {
  std::vector<RatPoint> poly = poly_in;
  for (auto& p : poly) {
    p.x *= t;
    p.y *= t;
  }
  Rat xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
  for (const auto& p : poly) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  long long count = 0;
  for (Int x = rat_ceil(xmin); x <= rat_floor(xmax); ++x)
    for (Int y = rat_ceil(ymin); y <= rat_floor(ymax); ++y)
      if (point_in_closed_polygon(poly, Rat(x), Rat(y))) ++count;
  return count;
}

// random simple lattice polygon: distinct lattice points sorted by angle
// around their centroid (star-shaped, hence simple)
inline std::vector<RatPoint> random_lattice_polygon(std::mt19937& rng, int max_vertices,
                                                    int coord_range) {
  std::uniform_int_distribution<int> nd(3, max_vertices);
  std::uniform_int_distribution<int> cd(-coord_range, coord_range);
  for (int attempt = 0; attempt < 200; ++attempt) {
    int n = nd(rng);
    std::set<std::pair<int, int>> pts;
    for (int i = 0; i < n; ++i) pts.insert({cd(rng), cd(rng)});
    if (static_cast<int>(pts.size()) < 3) continue;
    double cx = 0, cy = 0;
    for (auto& [x, y] : pts) {
      cx += x;
      cy += y;
    }
    cx /= pts.size();
    cy /= pts.size();
    std::vector<std::pair<double, std::pair<int, int>>> by_angle;
    for (auto& p : pts)
      by_angle.push_back({std::atan2(p.second - cy, p.first - cx), p});
    std::sort(by_angle.begin(), by_angle.end());
    // angular ties put collinear-from-centroid points adjacent; that can
    // self-intersect, so just retry on validation failure
    std::vector<RatPoint> poly;
    for (auto& [ang, p] : by_angle)
      poly.push_back({Rat(p.first), Rat(p.second)});
    try {
      validate_polygon(poly);
      return poly;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::runtime_error("could not sample a valid random polygon");
}

}  // namespace snlab::oracle
