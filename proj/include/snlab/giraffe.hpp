#pragma once

// Giraffe machinery: the long-thin-neck criterion for separating geodesics,
// the decomposition into symplectic planes carried by the glued tori, radial
// integration of stable-norm ball areas, and the growth-theorem comparison
// N(T)/T^2 against the summed plane areas.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "snlab/counting.hpp"
#include "snlab/enumeration.hpp"
#include "snlab/numeric.hpp"
#include "snlab/stable_norm.hpp"
#include "snlab/surface.hpp"
#include "snlab/symplectic.hpp"

namespace snlab {

struct NeckCertificate {
  Word curve;
  double curve_length = 0;
  std::optional<double> feasible_r;
  double collar_bound = 0;
  double criterion_value = 0;  // 2r - l cosh(r) at the returned r
};

// Sufficient numeric test for a long thin neck: the r-neighborhood of the
// separating geodesic is an embedded annulus for r up to the collar
// half-width, and its boundary curves have length l cosh(r); we search the
// admissible interval for 2r >= l cosh(r). The objective is concave, so a
// ternary search finds the maximizer.
inline NeckCertificate neck_criterion(const HyperbolicSurface& s, const Word& curve) {
  HomologyClass h = word_homology(s, curve);
  if (!h.is_zero())
    throw precondition_error("neck criterion requires a separating (null-homologous) curve");
  bool designated = false;
  SurfaceRelator rel(s.genus);
  Word canon = rel.canonical(curve);
  for (const auto& w : s.separating_words)
    if (rel.canonical(w) == canon) designated = true;
  if (!designated)
    throw precondition_error("curve is not a designated separating curve of this surface");

  NeckCertificate cert;
  cert.curve = canon;
  double l = word_geodesic_length(s, curve);
  cert.curve_length = l;
  cert.collar_bound = collar_halfwidth(l);

  auto criterion = [l](double r) { return 2.0 * r - l * std::cosh(r); };
  double lo = 0.0, hi = cert.collar_bound;
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (criterion(m1) < criterion(m2))
      lo = m1;
    else
      hi = m2;
  }
  double r = (lo + hi) / 2.0;
  cert.criterion_value = criterion(r);
  if (cert.criterion_value >= 0) cert.feasible_r = r;
  return cert;
}

struct SymplecticPlane {
  HomologyClass alpha, beta;  // intersection +-1, from the construction
};

struct GiraffeDecomposition {
  std::vector<NeckCertificate> necks;
  std::vector<SymplecticPlane> planes;
};

// giraffe-check-failed error carrying the failing certificate's data
struct giraffe_check_error : precondition_error {
  NeckCertificate failing;
  explicit giraffe_check_error(NeckCertificate c)
      : precondition_error("neck criterion infeasible for curve " + c.curve.str() +
                           " of length " + std::to_string(c.curve_length)),
        failing(std::move(c)) {}
};

inline GiraffeDecomposition decompose(const HyperbolicSurface& s, const Catalog&) {
  if (s.separating_words.empty())
    throw precondition_error("surface has no designated separating curves");
  GiraffeDecomposition dec;
  for (const auto& w : s.separating_words) {
    NeckCertificate cert = neck_criterion(s, w);
    if (!cert.feasible_r) throw giraffe_check_error(std::move(cert));
    dec.necks.push_back(std::move(cert));
  }
  // plane bases from the construction: the standard generators of each torus
  for (int i = 0; i < s.genus; ++i) {
    std::vector<long long> a(2 * s.genus, 0), b(2 * s.genus, 0);
    a[2 * i] = 1;
    b[2 * i + 1] = 1;
    dec.planes.push_back({HomologyClass(a), HomologyClass(b)});
  }
  // exact integer invariants of the decomposition
  SymplecticSpace space(s.genus);
  IMat big;
  for (const auto& p : dec.planes) {
    if (std::abs(intersection(space, p.alpha, p.beta)) != 1)
      throw std::logic_error("plane basis intersection is not +-1");
    big.push_back(IVec(p.alpha.c.begin(), p.alpha.c.end()));
    big.push_back(IVec(p.beta.c.begin(), p.beta.c.end()));
  }
  for (std::size_t i = 0; i < dec.planes.size(); ++i)
    for (std::size_t j = 0; j < dec.planes.size(); ++j) {
      if (i == j) continue;
      if (intersection(space, dec.planes[i].alpha, dec.planes[j].alpha) != 0 ||
          intersection(space, dec.planes[i].alpha, dec.planes[j].beta) != 0 ||
          intersection(space, dec.planes[i].beta, dec.planes[j].beta) != 0)
        throw std::logic_error("plane bases are not symplectically orthogonal");
    }
  Int det = imat_det(big);
  if (det != 1 && det != -1) throw std::logic_error("plane bases do not span unimodularly");
  return dec;
}

struct PlaneBallArea {
  double area = 0;
  int rays_used = 0;          // angular integration nodes
  int directions_used = 0;    // distinct covered primitive directions
  int max_coordinate = 0;     // largest |p|,|q| among directions used
};

// Omega(S_i cap B_1) by trapezoidal integration of r(theta)^2 / 2 over
// n_rays uniform angles; each angle is evaluated through sn on the nearest
// covered primitive integer direction p alpha + q beta. The denominator cap
// bounds the Stern-Brocot family considered; coverage in the table decides
// which directions are actually usable.
inline PlaneBallArea plane_ball_area(const StableNormTable& table, const SymplecticPlane& plane,
                                     int n_rays, int denominator_cap = 0) {
  if (n_rays < 8) throw std::invalid_argument("plane_ball_area needs at least 8 rays");
  if (denominator_cap <= 0)
    denominator_cap = std::max(1, static_cast<int>(std::ceil(std::sqrt(n_rays / 2.4))));

  struct Dir {
    double angle;
    double radius;
    long long p, q;
  };
  std::vector<Dir> dirs;
  for (long long p = -denominator_cap; p <= denominator_cap; ++p)
    for (long long q = -denominator_cap; q <= denominator_cap; ++q) {
      if (p == 0 && q == 0) continue;
      if (std::gcd(std::llabs(p), std::llabs(q)) != 1) continue;
      HomologyClass h = plane.alpha * p + plane.beta * q;
      const TableEntry* e = table.find(h);
      if (!e) continue;
      double norm = std::hypot(static_cast<double>(p), static_cast<double>(q));
      dirs.push_back({std::atan2(static_cast<double>(q), static_cast<double>(p)),
                      norm / e->sn, p, q});
    }
  if (dirs.empty())
    throw missing_artifact_error(
        "plane_ball_area: table covers no primitive direction of this plane");
  std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) { return a.angle < b.angle; });

  auto radius_nearest = [&](double theta) {
    // nearest covered direction in angle, cyclically
    auto cmp = [](const Dir& d, double v) { return d.angle < v; };
    auto it = std::lower_bound(dirs.begin(), dirs.end(), theta, cmp);
    double best = 1e300;
    const Dir* pick = nullptr;
    auto consider = [&](const Dir& d) {
      double diff = std::abs(d.angle - theta);
      diff = std::min(diff, 2 * M_PI - diff);
      if (diff < best) {
        best = diff;
        pick = &d;
      }
    };
    if (it != dirs.end()) consider(*it);
    if (it != dirs.begin()) consider(*(it - 1));
    consider(dirs.front());
    consider(dirs.back());
    return pick->radius;
  };

  PlaneBallArea out;
  out.rays_used = n_rays;
  out.directions_used = static_cast<int>(dirs.size());
  for (const auto& d : dirs)
    out.max_coordinate = std::max({out.max_coordinate, static_cast<int>(std::llabs(d.p)),
                                   static_cast<int>(std::llabs(d.q))});
  double sum = 0;
  double dtheta = 2 * M_PI / n_rays;
  double r_prev = radius_nearest(0.0);
  double r_first = r_prev;
  for (int k = 1; k <= n_rays; ++k) {
    double r_next = k == n_rays ? r_first : radius_nearest(k * dtheta);
    sum += 0.25 * (r_prev * r_prev + r_next * r_next) * dtheta;
    r_prev = r_next;
  }
  out.area = sum;
  return out;
}

struct GiraffeReport {
  GrowthFit fit;
  std::vector<double> areas;
  double area_sum = 0;
  double gap = 0;  // |c - sum| / sum
  bool pass = false;
  double tolerance = 0;
};

inline GiraffeReport giraffe_theorem_check(const CountSeries& series,
                                           const std::vector<double>& areas, double tol,
                                           double window_min, double window_max) {
  if (series.provenance != SurfaceKind::giraffe && series.provenance_note != "synthetic")
    throw precondition_error("giraffe_theorem_check refuses non-giraffe series");
  GiraffeReport rep;
  rep.fit = quadratic_fit(series, window_min, window_max);
  rep.areas = areas;
  rep.area_sum = std::accumulate(areas.begin(), areas.end(), 0.0);
  rep.tolerance = tol;
  rep.gap = std::abs(rep.fit.coefficient - rep.area_sum) / rep.area_sum;
  rep.pass = rep.gap <= tol;
  return rep;
}

}  // namespace snlab
