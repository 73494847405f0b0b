#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "snlab/counting.hpp"
#include "snlab/giraffe.hpp"

using namespace snlab;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  g.back() = hi;
  return g;
}

}  // namespace

TEST_CASE("quadratic fit recovers an exact quadratic") {
  CountSeries s;
  for (double t = 1; t <= 10; t += 1)
    s.samples.push_back({t, static_cast<long long>(7 * t * t)});
  GrowthFit fit = quadratic_fit(s, 1, 10);
  REQUIRE(fit.coefficient == Catch::Approx(7.0).epsilon(1e-12));
  REQUIRE(fit.residual == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("quadratic fit needs enough samples") {
  CountSeries s;
  for (double t : {1.0, 2.0, 3.0, 4.0}) s.samples.push_back({t, 1});
  REQUIRE_THROWS_AS(quadratic_fit(s, 0, 5), precondition_error);
}

TEST_CASE("flat square torus grows like pi T^2") {
  FlatTorus unit({1, 0}, {0, 1});
  auto grid = log_grid(10, 200, 20);
  CountSeries series = flat_count_minimal(unit, grid);
  for (std::size_t i = 0; i + 1 < series.samples.size(); ++i)
    REQUIRE(series.samples[i].second <= series.samples[i + 1].second);
  GrowthFit fit = quadratic_fit(series, 100, 200);
  REQUIRE(std::abs(fit.coefficient - M_PI) / M_PI < 0.03);
  REQUIRE(minkowski_upper_check(series, M_PI, 2, 0.05));
}

TEST_CASE("a synthetic series violating the bound is caught") {
  CountSeries s;
  for (double t = 1; t <= 10; t += 1)
    s.samples.push_back({t, static_cast<long long>(10 * t * t)});
  REQUIRE_FALSE(minkowski_upper_check(s, M_PI, 2, 0.05));
}

TEST_CASE("count_minimal is zero below the systole and nondecreasing") {
  HyperbolicSurface s = build_octagon_surface();
  Catalog cat = enumerate_classes(s, 6.0);
  StableNormTable t = build_stable_norm_table(cat, 6.0);
  MinimalityReport rep = minimality_flags(cat, t);
  CountSeries series = count_minimal(rep, cat, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  REQUIRE(series.samples[0].second == 0);
  REQUIRE(series.samples[1].second == 0);
  for (std::size_t i = 0; i + 1 < series.samples.size(); ++i)
    REQUIRE(series.samples[i].second <= series.samples[i + 1].second);
  REQUIRE(series.samples.back().second > 0);
  REQUIRE_THROWS_AS(count_minimal(rep, cat, {7.0}), precondition_error);
}

TEST_CASE("count_minimal dedups by homology class") {
  HyperbolicSurface s = build_octagon_surface();
  Catalog cat = enumerate_classes(s, 5.0);
  StableNormTable t = build_stable_norm_table(cat, 5.0);
  MinimalityReport rep = minimality_flags(cat, t);
  CountSeries series = count_minimal(rep, cat, {5.0});
  std::set<HomologyClass> distinct;
  for (std::size_t i = 0; i < cat.classes.size(); ++i)
    if (rep.flags[i] == Minimality::minimal) distinct.insert(cat.classes[i].homology);
  REQUIRE(series.samples[0].second == static_cast<long long>(distinct.size()));
  REQUIRE(series.samples[0].second < static_cast<long long>(rep.minimal_count));
}

TEST_CASE("count_G_Gamma on a giraffe torus curve") {
  HyperbolicSurface s = build_giraffe_genus2(0.1);
  EnumOptions opts;
  opts.threads = 2;
  Catalog cat = enumerate_classes(s, 5.0, opts);
  StableNormTable table = build_stable_norm_table(cat, 5.0);
  SymplecticSpace space(2);
  SurfaceRelator rel(2);
  Word a = rel.canonical(Word::parse("a"));
  const ConjugacyClass* gamma = nullptr;
  for (const auto& c : cat.classes)
    if (c.canonical_word == a) gamma = &c;
  REQUIRE(gamma != nullptr);
  GammaCountAudit audit;
  CountSeries series =
      count_G_Gamma(table, cat, space, {*gamma}, {1.0, 1.5, 2.0, 2.5, 3.0}, &audit);
  for (std::size_t i = 0; i + 1 < series.samples.size(); ++i)
    REQUIRE(series.samples[i].second <= series.samples[i + 1].second);
  REQUIRE(series.samples.back().second > 0);
  REQUIRE(audit.injective());

  // a non-minimizing Gamma is refused: the separating curve has homology 0
  const ConjugacyClass* sep = nullptr;
  for (const auto& c : cat.classes)
    if (c.homology.is_zero()) sep = &c;
  REQUIRE(sep != nullptr);
  REQUIRE_THROWS_AS(count_G_Gamma(table, cat, space, {*sep}, {1.0}, nullptr),
                    precondition_error);
  // grid beyond horizon minus l(Gamma) is refused
  REQUIRE_THROWS_AS(count_G_Gamma(table, cat, space, {*gamma}, {4.9}, nullptr),
                    precondition_error);
}

TEST_CASE("lattice asymptotics approach the exact area") {
  PlanarRegion sq;
  sq.polygon = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
  LatticeAsymptotic out = lattice_asymptotic(sq, {Rat(10), Rat(100), Rat(1000)});
  REQUIRE(out.exact_area == Rat(1));
  REQUIRE(out.final_deviation <= 3e-3);
  PlanarRegion l;
  l.polygon = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(1)},
               {Rat(1), Rat(1)}, {Rat(1), Rat(2)}, {Rat(0), Rat(2)}};
  LatticeAsymptotic lout = lattice_asymptotic(l, {Rat(1000)});
  REQUIRE(lout.exact_area == Rat(3));
  double perimeter = 8.0;
  REQUIRE(lout.final_deviation <= 4 * perimeter / 1000.0);
}
