#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "snlab/intlinalg.hpp"

using namespace snlab;

namespace {

IMat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IMat m(rows, IVec(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("hnf is canonical across generating sets") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    IMat a = random_matrix(rng, 3, 5, 6);
    IMat h1 = hnf_rows(a);
    // different generating set: row sums and swaps
    IMat b = a;
    for (std::size_t j = 0; j < 5; ++j) b[0][j] += 2 * a[1][j] - 3 * a[2][j];
    std::swap(b[1], b[2]);
    IMat h2 = hnf_rows(b);
    REQUIRE(h1 == h2);
  }
}

TEST_CASE("hnf pivots are positive and entries above are reduced") {
  std::mt19937 rng(11);
  IMat h = hnf_rows(random_matrix(rng, 4, 4, 9));
  std::size_t prev_pivot = 0;
  bool first = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t p = 0;
    while (p < h[i].size() && h[i][p] == 0) ++p;
    REQUIRE(p < h[i].size());
    REQUIRE(h[i][p] > 0);
    if (!first) REQUIRE(p > prev_pivot);
    for (std::size_t k = 0; k < i; ++k) {
      REQUIRE(h[k][p] >= 0);
      REQUIRE(h[k][p] < h[i][p]);
    }
    prev_pivot = p;
    first = false;
  }
}

TEST_CASE("kernel basis annihilates and is saturated") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    IMat a = random_matrix(rng, 2, 5, 5);
    IMat k = kernel_basis(a);
    for (const auto& row : k)
      for (std::size_t i = 0; i < a.size(); ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < 5; ++j) s += a[i][j] * row[j];
        REQUIRE(s == 0);
      }
    // saturation: kernel of the kernel's orthogonal recovers the kernel
    if (!k.empty()) {
      IMat orth = kernel_basis(k);
      IMat back = orth.empty() ? hnf_rows(imat_identity(5)) : kernel_basis(orth);
      REQUIRE(back == k);
    }
  }
}

TEST_CASE("smith normal form transforms are unimodular and reconstruct") {
  std::mt19937 rng(19);
  for (int iter = 0; iter < 30; ++iter) {
    IMat a = random_matrix(rng, 3, 4, 7);
    auto s = smith_normal_form(a);
    REQUIRE(abs(imat_det(s.u)) == 1);
    REQUIRE(abs(imat_det(s.w)) == 1);
    REQUIRE(imat_mul(imat_mul(s.u, a), s.w) == s.d);
    // divisibility chain
    Int prev = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      Int di = s.d[i][i];
      for (std::size_t j = 0; j < 4; ++j)
        if (j != i) REQUIRE(s.d[i][j] == 0);
      if (prev != 0 && di != 0) REQUIRE(di % prev == 0);
      prev = di;
    }
  }
}

TEST_CASE("solve_in_row_lattice inverts membership") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 40; ++iter) {
    IMat h = hnf_rows(random_matrix(rng, 3, 5, 4));
    if (h.size() < 2) continue;
    std::uniform_int_distribution<int> d(-4, 4);
    IVec y(h.size());
    for (auto& x : y) x = d(rng);
    IVec target = imat_apply_left(y, h);
    auto sol = solve_in_row_lattice(h, target);
    REQUIRE(sol.has_value());
    REQUIRE(imat_apply_left(*sol, h) == target);
  }
}

TEST_CASE("unimodular completion spans the input lattice") {
  // saturated example rows
  IMat s = {{IVec{1, 2, 3, 4}}, {IVec{0, 1, 1, 2}}};
  s = hnf_rows(s);
  IMat b = complete_to_unimodular(s);
  REQUIRE(abs(imat_det(b)) == 1);
  IMat first(b.begin(), b.begin() + 2);
  REQUIRE(hnf_rows(first) == s);
}

TEST_CASE("non-saturated completion is rejected") {
  IMat s = {{IVec{2, 0, 0}}};
  REQUIRE_THROWS_AS(complete_to_unimodular(s), std::invalid_argument);
}
