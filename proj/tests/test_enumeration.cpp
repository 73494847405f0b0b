#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "oracles.hpp"
#include "snlab/enumeration.hpp"

using namespace snlab;

namespace {

std::set<std::string> word_set(const Catalog& cat) {
  std::set<std::string> s;
  for (const auto& c : cat.classes) s.insert(c.canonical_word.str());
  return s;
}

}  // namespace

TEST_CASE("horizon below the systole yields an empty catalog") {
  HyperbolicSurface s = build_octagon_surface();
  Catalog cat = enumerate_classes(s, 1.0);
  REQUIRE(cat.classes.empty());
  REQUIRE(cat.complete_flag);
  REQUIRE_THROWS_AS(systole(cat), missing_artifact_error);
}

TEST_CASE("octagon catalog matches brute force") {
  HyperbolicSurface s = build_octagon_surface();
  EnumOptions opts;
  opts.threads = 2;
  Catalog cat = enumerate_classes(s, 4.0, opts);
  auto bf = oracle::brute_force_classes(s, 4.0, 8);
  REQUIRE(word_set(cat) == bf);
}

TEST_CASE("catalogs are nested in the horizon") {
  HyperbolicSurface s = build_octagon_surface();
  Catalog small = enumerate_classes(s, 4.0);
  Catalog large = enumerate_classes(s, 6.0);
  auto ws = word_set(small), wl = word_set(large);
  for (const auto& w : ws) REQUIRE(wl.count(w) == 1);
  REQUIRE(wl.size() > ws.size());
}

TEST_CASE("catalog lengths are sorted and within the bound") {
  HyperbolicSurface s = build_octagon_surface();
  Catalog cat = enumerate_classes(s, 6.0);
  for (std::size_t i = 0; i + 1 < cat.classes.size(); ++i)
    REQUIRE(cat.classes[i].length <= cat.classes[i + 1].length + 1e-15);
  for (const auto& c : cat.classes) {
    REQUIRE(len_le(c.length, 6.0));
    REQUIRE(c.length ==
            Catch::Approx(trace_to_length(std::abs(c.trace))).epsilon(1e-12));
  }
}

TEST_CASE("every class has its inverse orientation in the catalog") {
  HyperbolicSurface s = build_octagon_surface();
  SurfaceRelator rel(2);
  Catalog cat = enumerate_classes(s, 6.0);
  auto ws = word_set(cat);
  for (const auto& c : cat.classes) {
    Word inv = rel.canonical(c.canonical_word.inverse());
    REQUIRE(ws.count(inv.str()) == 1);
  }
}

TEST_CASE("giraffe systole is the separating curve") {
  HyperbolicSurface s = build_giraffe_genus2(0.1);
  EnumOptions opts;
  opts.threads = 2;
  Catalog cat = enumerate_classes(s, 3.0, opts);
  REQUIRE(systole(cat) == Catch::Approx(0.1).margin(1e-9));
  REQUIRE(cat.complete_flag);
  // powers of the separating curve up to the horizon, both orientations
  int zero_hom = 0;
  for (const auto& c : cat.classes)
    if (c.homology.is_zero()) ++zero_hom;
  REQUIRE(zero_hom == 60);
}

TEST_CASE("enumeration is deterministic across worker counts") {
  HyperbolicSurface s = build_octagon_surface();
  EnumOptions one, four;
  one.threads = 1;
  four.threads = 4;
  Catalog c1 = enumerate_classes(s, 5.0, one);
  Catalog c4 = enumerate_classes(s, 5.0, four);
  REQUIRE(c1.classes.size() == c4.classes.size());
  for (std::size_t i = 0; i < c1.classes.size(); ++i) {
    REQUIRE(c1.classes[i].canonical_word == c4.classes[i].canonical_word);
    REQUIRE(c1.classes[i].length == c4.classes[i].length);
  }
}

TEST_CASE("catalog is stable under a larger pruning slack") {
  HyperbolicSurface oct = build_octagon_surface();
  EnumOptions base, wide;
  wide.prune_slack = 10.0;
  REQUIRE(word_set(enumerate_classes(oct, 5.0, base)) ==
          word_set(enumerate_classes(oct, 5.0, wide)));

  HyperbolicSurface gir = build_giraffe_genus2(0.1);
  EnumOptions gbase, gwide;
  gbase.threads = 2;
  gwide.threads = 2;
  gwide.prune_slack = 13.0;
  REQUIRE(word_set(enumerate_classes(gir, 3.0, gbase)) ==
          word_set(enumerate_classes(gir, 3.0, gwide)));
}

TEST_CASE("node budget overruns are refused loudly") {
  HyperbolicSurface s = build_octagon_surface();
  EnumOptions opts;
  opts.max_nodes = 50;
  REQUIRE_THROWS_AS(enumerate_classes(s, 5.0, opts), resource_error);
}

TEST_CASE("giraffe factor split agrees with whole-group search") {
  // at a small horizon the ball search over the full amalgam is affordable;
  // forcing it through a metadata-free copy cross-checks the factor mode
  HyperbolicSurface g = build_giraffe_genus2(0.8);
  Catalog split = enumerate_classes(g, 2.5);
  HyperbolicSurface whole = g;
  whole.kind = SurfaceKind::generic;
  whole.separating_words.clear();
  whole.factor_frames.clear();
  EnumOptions opts;
  opts.prune_slack = 9.0;
  Catalog ball = enumerate_classes(whole, 2.5, opts);
  REQUIRE(word_set(split) == word_set(ball));
}
