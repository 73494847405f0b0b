#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "snlab/symplectic.hpp"

using namespace snlab;

namespace {

HomologyClass basis_vec(int dim, int idx) {
  std::vector<long long> v(dim, 0);
  v[idx] = 1;
  return HomologyClass(v);
}

HomologyClass random_class(std::mt19937& rng, int dim, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<long long> v(dim);
  for (auto& x : v) x = d(rng);
  return HomologyClass(v);
}

// a random saturated sublattice of Z^{2g}
Sublattice random_saturated(std::mt19937& rng, const SymplecticSpace& s, int rank) {
  while (true) {
    IMat gens;
    std::uniform_int_distribution<int> d(-3, 3);
    for (int i = 0; i < rank; ++i) {
      IVec v(s.dim());
      for (auto& x : v) x = d(rng);
      gens.push_back(v);
    }
    Sublattice v = Sublattice::from_generators(s.dim(), gens);
    if (v.rank() != static_cast<std::size_t>(rank)) continue;
    return saturate(v);
  }
}

// random isotropic sublattice of rank g-1 (possibly non-saturated input)
Sublattice random_isotropic(std::mt19937& rng, const SymplecticSpace& s) {
  const int want = s.genus - 1;
  while (true) {
    std::vector<HomologyClass> picked;
    Sublattice span = Sublattice::from_generators(s.dim(), {});
    for (int tries = 0; tries < 200 && static_cast<int>(picked.size()) < want; ++tries) {
      HomologyClass cand = random_class(rng, static_cast<int>(s.dim()), 3);
      if (cand.is_zero()) continue;
      bool iso = true;
      for (const auto& p : picked) iso &= intersection(s, p, cand) == 0;
      if (!iso) continue;
      std::vector<HomologyClass> next = picked;
      next.push_back(cand);
      Sublattice cand_span = Sublattice::from_classes(s, next);
      if (cand_span.rank() != next.size()) continue;
      picked = std::move(next);
    }
    if (static_cast<int>(picked.size()) == want) return Sublattice::from_classes(s, picked);
  }
}

}  // namespace

TEST_CASE("intersection pairing on the standard basis") {
  SymplecticSpace s(2);
  auto e1 = basis_vec(4, 0), f1 = basis_vec(4, 1), e2 = basis_vec(4, 2);
  REQUIRE(intersection(s, e1, f1) == 1);
  REQUIRE(intersection(s, e1, e2) == 0);
  REQUIRE(intersection(s, f1, e1) == -1);
}

TEST_CASE("intersection is antisymmetric and vanishes on the diagonal") {
  SymplecticSpace s(2);
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = random_class(rng, 4), b = random_class(rng, 4);
    REQUIRE(intersection(s, a, b) == -intersection(s, b, a));
    REQUIRE(intersection(s, a, a) == 0);
  }
}

TEST_CASE("intersection matrix squares to minus identity") {
  for (int g : {1, 2, 3}) {
    SymplecticSpace s(g);
    IMat j = s.intersection_matrix();
    IMat jj = imat_mul(j, j);
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t k = 0; k < s.dim(); ++k)
        REQUIRE(jj[i][k] == (i == k ? -1 : 0));
    REQUIRE(imat_det(j) == 1);
  }
}

TEST_CASE("dimension mismatch is rejected") {
  SymplecticSpace s(2);
  REQUIRE_THROWS_AS(intersection(s, HomologyClass({1, 0}), basis_vec(4, 0)),
                    std::invalid_argument);
}

TEST_CASE("symplectic complement of span{e1}") {
  SymplecticSpace s(2);
  Sublattice v = Sublattice::from_classes(s, {basis_vec(4, 0)});
  Sublattice c = symplectic_complement(s, v);
  Sublattice expect = Sublattice::from_classes(s, {basis_vec(4, 0), basis_vec(4, 2), basis_vec(4, 3)});
  REQUIRE(c == expect);
}

TEST_CASE("complement of the full lattice is zero") {
  SymplecticSpace s(2);
  Sublattice full = Sublattice::from_classes(
      s, {basis_vec(4, 0), basis_vec(4, 1), basis_vec(4, 2), basis_vec(4, 3)});
  REQUIRE(symplectic_complement(s, full).rank() == 0);
}

TEST_CASE("a Lagrangian plane is its own complement") {
  SymplecticSpace s(2);
  Sublattice v = Sublattice::from_classes(s, {basis_vec(4, 0), basis_vec(4, 2)});
  REQUIRE(symplectic_complement(s, v) == v);
}

TEST_CASE("double complement fixes saturated sublattices") {
  std::mt19937 rng(17);
  for (int g : {2, 3}) {
    SymplecticSpace s(g);
    for (int iter = 0; iter < 40; ++iter) {
      std::uniform_int_distribution<int> rd(1, 2 * g - 1);
      Sublattice v = random_saturated(rng, s, rd(rng));
      REQUIRE(symplectic_complement(s, symplectic_complement(s, v)) == v);
    }
  }
}

TEST_CASE("quotient by span{e1} in genus 2") {
  SymplecticSpace s(2);
  QuotientLattice q = quotient_lattice(s, Sublattice::from_classes(s, {basis_vec(4, 0)}));
  REQUIRE(q.induced_form == IMat{{Int(0), Int(1)}, {Int(-1), Int(0)}});
  // e1 is killed, e2 and f2 map to a Z^2 basis
  auto z = q.project(basis_vec(4, 0));
  REQUIRE(z == std::pair<long long, long long>{0, 0});
  auto pe2 = q.project(basis_vec(4, 2));
  auto pf2 = q.project(basis_vec(4, 3));
  long long det = pe2.first * pf2.second - pe2.second * pf2.first;
  REQUIRE(std::abs(det) == 1);
}

TEST_CASE("quotient by span{e1+e2} is unimodular") {
  SymplecticSpace s(2);
  HomologyClass v = basis_vec(4, 0) + basis_vec(4, 2);
  QuotientLattice q = quotient_lattice(s, Sublattice::from_classes(s, {v}));
  REQUIRE(q.induced_form == IMat{{Int(0), Int(1)}, {Int(-1), Int(0)}});
  REQUIRE(q.project(v) == std::pair<long long, long long>{0, 0});
}

TEST_CASE("non-isotropic input is rejected") {
  SymplecticSpace s(2);
  Sublattice v = Sublattice::from_classes(s, {basis_vec(4, 0), basis_vec(4, 1)});
  REQUIRE_THROWS_AS(quotient_lattice(s, v), precondition_error);
}

TEST_CASE("wrong rank is rejected") {
  SymplecticSpace s(3);
  Sublattice v = Sublattice::from_classes(s, {basis_vec(6, 0)});
  REQUIRE_THROWS_AS(quotient_lattice(s, v), precondition_error);
}

TEST_CASE("projection rejects classes outside the ambient") {
  SymplecticSpace s(2);
  QuotientLattice q = quotient_lattice(s, Sublattice::from_classes(s, {basis_vec(4, 0)}));
  REQUIRE_THROWS_AS(q.project(basis_vec(4, 1)), std::domain_error);
}

TEST_CASE("projection is additive on random ambient vectors") {
  SymplecticSpace s(2);
  QuotientLattice q = quotient_lattice(s, Sublattice::from_classes(s, {basis_vec(4, 0)}));
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    auto a = random_class(rng, 4), b = random_class(rng, 4);
    a.c[1] = 0;  // stay inside e1-perp
    b.c[1] = 0;
    auto pa = q.project(a), pb = q.project(b), pab = q.project(a + b);
    REQUIRE(pab.first == pa.first + pb.first);
    REQUIRE(pab.second == pa.second + pb.second);
  }
}

TEST_CASE("random isotropic quotients are unimodular and surjective") {
  std::mt19937 rng(31);
  for (int g : {2, 3}) {
    SymplecticSpace s(g);
    for (int iter = 0; iter < 50; ++iter) {
      Sublattice v = random_isotropic(rng, s);
      QuotientLattice q = quotient_lattice(s, v);
      REQUIRE(q.induced_form == IMat{{Int(0), Int(1)}, {Int(-1), Int(0)}});
      // kernel vectors project to zero
      for (const auto& k : q.kernel.basis) {
        HomologyClass kh(std::vector<long long>(k.size()));
        for (std::size_t i = 0; i < k.size(); ++i) kh.c[i] = static_cast<long long>(k[i]);
        REQUIRE(q.project(kh) == std::pair<long long, long long>{0, 0});
      }
      // images of the ambient basis span Z^2
      IMat images;
      for (const auto& row : q.ambient.basis) {
        HomologyClass h(std::vector<long long>(row.size()));
        for (std::size_t i = 0; i < row.size(); ++i) h.c[i] = static_cast<long long>(row[i]);
        auto p = q.project(h);
        images.push_back({Int(p.first), Int(p.second)});
      }
      Sublattice img = Sublattice::from_generators(2, images);
      REQUIRE(img.basis == imat_identity(2));
    }
  }
}
