#pragma once

// Integer symplectic linear algebra on H_1 of a genus-g surface: the
// intersection form, sublattices in canonical (Hermite) form, symplectic
// complements, and the rank-2 quotient lattice carried by an isotropic
// rank-(g-1) sublattice. Everything is exact integer arithmetic.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snlab/intlinalg.hpp"
#include "snlab/numeric.hpp"

namespace snlab {

// Integer homology class in coordinates of the fixed symplectic basis
// (a_1, b_1, ..., a_g, b_g).
struct HomologyClass {
  std::vector<long long> c;

  HomologyClass() = default;
  explicit HomologyClass(std::vector<long long> v) : c(std::move(v)) {}

  std::size_t dim() const { return c.size(); }
  bool is_zero() const {
    for (long long x : c)
      if (x != 0) return false;
    return true;
  }
  HomologyClass operator+(const HomologyClass& o) const {
    check_dim(o);
    HomologyClass r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  HomologyClass operator-() const {
    HomologyClass r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  HomologyClass operator*(long long k) const {
    HomologyClass r = *this;
    for (auto& x : r.c) x *= k;
    return r;
  }
  bool operator==(const HomologyClass& o) const = default;
  auto operator<=>(const HomologyClass& o) const = default;

  void check_dim(const HomologyClass& o) const {
    if (c.size() != o.c.size())
      throw std::invalid_argument("homology class dimension mismatch");
  }
};

struct HomologyClassHash {
  std::size_t operator()(const HomologyClass& h) const {
    std::size_t s = h.c.size();
    for (long long x : h.c) s = s * 1000003u + std::hash<long long>{}(x);
    return s;
  }
};

// H_1(M,Z) = Z^{2g} with the standard symplectic form Int(a_i, b_i) = 1.
struct SymplecticSpace {
  int genus = 2;

  explicit SymplecticSpace(int g) : genus(g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
  }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(genus); }

  // J in the interleaved basis: blocks [[0,1],[-1,0]].
  IMat intersection_matrix() const {
    IMat j(dim(), IVec(dim(), 0));
    for (int i = 0; i < genus; ++i) {
      j[2 * i][2 * i + 1] = 1;
      j[2 * i + 1][2 * i] = -1;
    }
    return j;
  }
};

inline long long intersection(const SymplecticSpace& s, const HomologyClass& a,
                              const HomologyClass& b) {
  if (a.dim() != s.dim() || b.dim() != s.dim())
    throw std::invalid_argument("intersection: dimension mismatch");
  long long r = 0;
  for (int i = 0; i < s.genus; ++i)
    r += a.c[2 * i] * b.c[2 * i + 1] - a.c[2 * i + 1] * b.c[2 * i];
  return r;
}

// A sublattice of Z^{2g} stored by its Hermite-normal-form basis, so equal
// sublattices compare equal.
struct Sublattice {
  IMat basis;  // HNF rows
  std::size_t ambient_dim = 0;

  std::size_t rank() const { return basis.size(); }
  bool operator==(const Sublattice& o) const = default;

  static Sublattice from_generators(std::size_t ambient_dim, IMat gens) {
    for (const auto& g : gens)
      if (g.size() != ambient_dim)
        throw std::invalid_argument("sublattice generator dimension mismatch");
    Sublattice v;
    v.ambient_dim = ambient_dim;
    v.basis = hnf_rows(std::move(gens));
    return v;
  }

  static Sublattice from_classes(const SymplecticSpace& s,
                                 const std::vector<HomologyClass>& hs) {
    IMat gens;
    for (const auto& h : hs) {
      if (h.dim() != s.dim())
        throw std::invalid_argument("sublattice class dimension mismatch");
      IVec row(h.c.begin(), h.c.end());
      gens.push_back(std::move(row));
    }
    return from_generators(s.dim(), std::move(gens));
  }

  bool contains(const IVec& v) const {
    return solve_in_row_lattice(basis, v).has_value();
  }
};

// Saturation: (V tensor Q) intersected with Z^n, realized as the double
// Euclidean-orthogonal kernel.
inline Sublattice saturate(const Sublattice& v) {
  if (v.rank() == 0) return v;
  IMat orth = kernel_basis(v.basis);
  Sublattice r;
  r.ambient_dim = v.ambient_dim;
  r.basis = orth.empty() ? hnf_rows(imat_identity(v.ambient_dim)) : kernel_basis(orth);
  return r;
}

// Symplectic orthogonal: integer kernel of h -> (Int(v_i, h))_i. Kernels of
// integer maps are saturated, so the result is canonical and saturated.
inline Sublattice symplectic_complement(const SymplecticSpace& s, const Sublattice& v) {
  if (v.ambient_dim != s.dim())
    throw std::invalid_argument("symplectic_complement: dimension mismatch");
  IMat j = s.intersection_matrix();
  IMat rows;  // row i = v_i^T J
  for (const auto& vi : v.basis) rows.push_back(imat_apply_left(vi, j));
  if (rows.empty()) {
    Sublattice full;
    full.ambient_dim = s.dim();
    full.basis = hnf_rows(imat_identity(s.dim()));
    return full;
  }
  Sublattice r;
  r.ambient_dim = s.dim();
  r.basis = kernel_basis(rows);
  return r;
}

// The rank-2 symplectic quotient carried by a saturated isotropic
// rank-(g-1) sublattice: ambient = V^perp, kernel = V, an integer projection
// onto Z^2 and the induced unimodular symplectic form.
struct QuotientLattice {
  Sublattice ambient;  // V^perp cap Z^{2g}
  Sublattice kernel;   // saturation of V
  IMat projection_matrix;  // 2g x 2, h -> h * P for h in the ambient lattice
  IMat induced_form;       // [[0,1],[-1,0]] after orientation normalization
  IVec quotient_basis_u, quotient_basis_v;  // ambient vectors mapping to (1,0),(0,1)

  std::pair<long long, long long> project(const HomologyClass& h) const {
    if (h.dim() != ambient.ambient_dim)
      throw std::invalid_argument("project: dimension mismatch");
    IVec t(h.c.begin(), h.c.end());
    auto y = solve_in_row_lattice(ambient.basis, t);
    if (!y) throw std::domain_error("project: class lies outside V(Gamma)^perp");
    IVec img = imat_apply_left(t, projection_matrix);
    return {static_cast<long long>(img[0]), static_cast<long long>(img[1])};
  }

  bool in_ambient(const HomologyClass& h) const {
    IVec t(h.c.begin(), h.c.end());
    return ambient.contains(t);
  }
};

inline QuotientLattice quotient_lattice(const SymplecticSpace& s, const Sublattice& v_in) {
  const std::size_t n = s.dim();
  if (v_in.ambient_dim != n)
    throw std::invalid_argument("quotient_lattice: dimension mismatch");
  // isotropy check on the generators
  IMat jm = s.intersection_matrix();
  for (std::size_t i = 0; i < v_in.rank(); ++i) {
    IVec ji = imat_apply_left(v_in.basis[i], jm);
    for (std::size_t j = i; j < v_in.rank(); ++j) {
      Int ip = 0;
      for (std::size_t k = 0; k < n; ++k) ip += ji[k] * v_in.basis[j][k];
      if (ip != 0)
        throw precondition_error("quotient_lattice: sublattice is not isotropic");
    }
  }
  if (v_in.rank() != static_cast<std::size_t>(s.genus - 1))
    throw precondition_error("quotient_lattice: rank must be genus-1");

  QuotientLattice q;
  q.kernel = saturate(v_in);
  q.ambient = symplectic_complement(s, v_in);
  if (q.ambient.rank() != static_cast<std::size_t>(s.genus + 1))
    throw precondition_error("quotient_lattice: complement has unexpected rank");

  // coordinates of the kernel basis inside the ambient basis
  IMat coords;
  for (const auto& k : q.kernel.basis) {
    auto y = solve_in_row_lattice(q.ambient.basis, k);
    if (!y) throw std::logic_error("quotient_lattice: V not inside V^perp");
    coords.push_back(*y);
  }
  // complete to a basis of Z^{g+1}; last two rows descend to a basis of the quotient
  const std::size_t r = coords.size();
  IMat m = r == 0 ? imat_identity(q.ambient.rank()) : complete_to_unimodular(coords);
  IVec u = imat_apply_left(m[r], q.ambient.basis);
  IVec w = imat_apply_left(m[r + 1], q.ambient.basis);

  auto form = [&](const IVec& x, const IVec& y) {
    Int acc = 0;
    for (int i = 0; i < s.genus; ++i)
      acc += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
    return acc;
  };
  Int om = form(u, w);
  if (om != 1 && om != -1)
    throw std::logic_error("quotient_lattice: induced form is not unimodular");
  if (om == -1) {
    std::swap(u, w);
    std::swap(m[r], m[r + 1]);
  }
  q.quotient_basis_u = u;
  q.quotient_basis_v = w;
  q.induced_form = {{Int(0), Int(1)}, {Int(-1), Int(0)}};

  // projection on ambient coordinates: y -> y * (last two columns of m^{-1});
  // extend to an integer matrix on all of Z^{2g} through a completion of the
  // ambient basis (valid since the ambient lattice is saturated).
  IMat minv = imat_inverse_unimodular(m);
  IMat ncols(r + 2, IVec(2, 0));
  for (std::size_t i = 0; i < r + 2; ++i) {
    ncols[i][0] = minv[i][r];
    ncols[i][1] = minv[i][r + 1];
  }
  IMat b = complete_to_unimodular(q.ambient.basis);  // first g+1 rows span the ambient
  IMat binv = imat_inverse_unimodular(b);
  IMat ext(n, IVec(2, 0));
  for (std::size_t i = 0; i < r + 2; ++i) {
    auto y = solve_in_row_lattice(q.ambient.basis, b[i]);
    if (!y) throw std::logic_error("quotient_lattice: completion row escaped the ambient");
    ext[i] = imat_apply_left(*y, ncols);
  }
  q.projection_matrix = imat_mul(binv, ext);
  return q;
}

}  // namespace snlab
