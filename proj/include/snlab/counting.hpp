#pragma once

// Counting functions N(T) and N_Gamma(L), quadratic growth fits, the
// Minkowski-style upper check, and lattice-count asymptotics for planar
// regions.

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "snlab/enumeration.hpp"
#include "snlab/numeric.hpp"
#include "snlab/region.hpp"
#include "snlab/stable_norm.hpp"
#include "snlab/symplectic.hpp"

namespace snlab {

enum class CountKind { n_of_t, n_gamma };

struct CountSeries {
  CountKind kind = CountKind::n_of_t;
  std::vector<std::pair<double, long long>> samples;  // (T, count), T ascending
  SurfaceKind provenance = SurfaceKind::generic;
  std::string provenance_note;
};

// distinct homology classes carrying a flagged-minimal geodesic of length <= T
inline CountSeries count_minimal(const MinimalityReport& report, const Catalog& cat,
                                 const std::vector<double>& t_grid) {
  for (double t : t_grid)
    if (t > cat.length_bound + kLengthTol)
      throw precondition_error("count grid exceeds the catalog horizon");
  std::vector<double> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  CountSeries out;
  out.kind = CountKind::n_of_t;
  out.provenance = cat.kind;
  // classes are sorted by length; sweep once
  std::unordered_set<HomologyClass, HomologyClassHash> seen;
  std::size_t idx = 0;
  for (double t : grid) {
    while (idx < cat.classes.size() && len_le(cat.classes[idx].length, t)) {
      if (report.flags[idx] == Minimality::minimal) seen.insert(cat.classes[idx].homology);
      ++idx;
    }
    out.samples.push_back({t, static_cast<long long>(seen.size())});
  }
  return out;
}

// the flat-torus pipeline: every class is realized by a straight geodesic of
// exactly the stable-norm length, so H(T) is the set of nonzero lattice
// points of Euclidean length <= T
inline CountSeries flat_count_minimal(const FlatTorus& torus, const std::vector<double>& t_grid) {
  std::vector<double> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  CountSeries out;
  out.kind = CountKind::n_of_t;
  out.provenance_note = "flat_torus";
  double tmax = grid.empty() ? 0.0 : grid.back();
  std::vector<double> lengths;
  double det = torus.u[0] * torus.v[1] - torus.u[1] * torus.v[0];
  long long pmax = static_cast<long long>(std::hypot(torus.v[0], torus.v[1]) * tmax / std::abs(det)) + 1;
  long long qmax = static_cast<long long>(std::hypot(torus.u[0], torus.u[1]) * tmax / std::abs(det)) + 1;
  for (long long p = -pmax; p <= pmax; ++p)
    for (long long q = -qmax; q <= qmax; ++q) {
      if (p == 0 && q == 0) continue;
      double len = flat_class_length(torus, p, q);
      if (len_le(len, tmax)) lengths.push_back(len);
    }
  std::sort(lengths.begin(), lengths.end());
  std::size_t idx = 0;
  for (double t : grid) {
    while (idx < lengths.size() && len_le(lengths[idx], t)) ++idx;
    out.samples.push_back({t, static_cast<long long>(idx)});
  }
  return out;
}

struct GammaCountAudit {
  long long distinct_projections = 0;
  long long distinct_homologies = 0;
  bool injective() const { return distinct_projections == distinct_homologies; }
};

// classes alpha with Gamma + alpha still a minimizing multicurve, counted by
// projection to the rank-2 quotient lattice L(Gamma)
inline CountSeries count_G_Gamma(const StableNormTable& table, const Catalog& cat,
                                 const SymplecticSpace& space,
                                 const std::vector<ConjugacyClass>& gamma,
                                 const std::vector<double>& l_grid,
                                 GammaCountAudit* audit = nullptr) {
  if (gamma.empty()) throw precondition_error("Gamma must be non-empty");
  if (!is_minimizing_multicurve(table, gamma))
    throw precondition_error("Gamma is not a minimizing multicurve");
  double gamma_len = 0;
  std::vector<HomologyClass> gamma_h;
  for (const auto& g : gamma) {
    gamma_len += g.length;
    gamma_h.push_back(g.homology);
  }
  for (double l : l_grid)
    if (l + gamma_len > table.horizon + kLengthTol)
      throw precondition_error("count grid exceeds the table horizon minus l(Gamma)");

  QuotientLattice q = quotient_lattice(space, Sublattice::from_classes(space, gamma_h));

  std::vector<double> grid = l_grid;
  std::sort(grid.begin(), grid.end());
  CountSeries out;
  out.kind = CountKind::n_gamma;
  out.provenance = cat.kind;

  struct Accepted {
    double length;
    std::pair<long long, long long> proj;
    HomologyClass h;
  };
  std::vector<Accepted> accepted;
  for (const auto& c : cat.classes) {
    if (c.length + gamma_len > table.horizon + kLengthTol) continue;
    if (!q.in_ambient(c.homology)) continue;  // Int([alpha],[gamma_i]) != 0
    std::vector<ConjugacyClass> multi = gamma;
    multi.push_back(c);
    if (!is_minimizing_multicurve(table, multi)) continue;
    accepted.push_back({c.length, q.project(c.homology), c.homology});
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const auto& a, const auto& b) { return a.length < b.length; });

  std::set<std::pair<long long, long long>> projections;
  std::set<HomologyClass> homologies;
  std::size_t idx = 0;
  for (double l : grid) {
    while (idx < accepted.size() && len_le(accepted[idx].length, l)) {
      projections.insert(accepted[idx].proj);
      homologies.insert(accepted[idx].h);
      ++idx;
    }
    out.samples.push_back({l, static_cast<long long>(projections.size())});
  }
  if (audit) {
    while (idx < accepted.size()) {
      projections.insert(accepted[idx].proj);
      homologies.insert(accepted[idx].h);
      ++idx;
    }
    audit->distinct_projections = static_cast<long long>(projections.size());
    audit->distinct_homologies = static_cast<long long>(homologies.size());
  }
  return out;
}

struct GrowthFit {
  double coefficient = 0;
  double residual = 0;
  double window_min = 0, window_max = 0;
};

// least squares for count ~ c T^2 over the window; residual is the RMS of
// (count - c T^2) / T^2
inline GrowthFit quadratic_fit(const CountSeries& series, double window_min, double window_max) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [t, n] : series.samples)
    if (t >= window_min - kLengthTol && t <= window_max + kLengthTol)
      pts.push_back({t, static_cast<double>(n)});
  if (pts.size() < 5)
    throw precondition_error("quadratic fit needs at least 5 samples in the window");
  double num = 0, den = 0;
  for (auto [t, n] : pts) {
    num += n * t * t;
    den += t * t * t * t;
  }
  GrowthFit fit;
  fit.coefficient = num / den;
  fit.window_min = window_min;
  fit.window_max = window_max;
  double ss = 0;
  for (auto [t, n] : pts) {
    double r = (n - fit.coefficient * t * t) / (t * t);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / pts.size());
  return fit;
}

inline bool minkowski_upper_check(const CountSeries& series, double vol_b1, int dim,
                                  double slack = 0.05) {
  for (const auto& [t, n] : series.samples)
    if (static_cast<double>(n) > vol_b1 * std::pow(t, dim) * (1.0 + slack)) return false;
  return true;
}

struct LatticeAsymptotic {
  std::vector<std::pair<double, double>> normalized;  // (t, count / t^2)
  std::vector<long long> counts;
  Rat exact_area{0};
  double final_deviation = 0;
};

inline LatticeAsymptotic lattice_asymptotic(const PlanarRegion& region,
                                            const std::vector<Rat>& t_grid) {
  if (!region.is_polygon())
    throw precondition_error("lattice_asymptotic requires a polygon region");
  LatticeAsymptotic out;
  out.exact_area = polygon_area(region.polygon);
  for (const Rat& t : t_grid) {
    long long c = lattice_count_polygon(region.polygon, t);
    double td = boost::rational_cast<double>(t);
    out.counts.push_back(c);
    out.normalized.push_back({td, c / (td * td)});
  }
  if (!out.normalized.empty())
    out.final_deviation =
        std::abs(out.normalized.back().second - boost::rational_cast<double>(out.exact_area));
  return out;
}

}  // namespace snlab
