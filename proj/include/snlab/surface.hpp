#pragma once

// Concrete surfaces: flat tori with exact length functions and genus-2
// hyperbolic surfaces given by explicit SL(2,R) generators satisfying the
// standard relation prod [a_i, b_i] = 1. Includes the regular-octagon
// surface and giraffe surfaces glued from two one-holed tori along a short
// separating geodesic.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "snlab/numeric.hpp"
#include "snlab/symplectic.hpp"
#include "snlab/word.hpp"

namespace snlab {

template <typename T>
struct Mat2T {
  T a = 1, b = 0, c = 0, d = 1;

  Mat2T operator*(const Mat2T& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2T inverse() const { return {d, -b, -c, a}; }  // valid for det = 1
  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
  T frobenius_sq() const { return a * a + b * b + c * c + d * d; }
};

using Mat2 = Mat2T<double>;
using Mat2L = Mat2T<long double>;

inline Mat2L to_long(const Mat2& m) {
  return {static_cast<long double>(m.a), static_cast<long double>(m.b),
          static_cast<long double>(m.c), static_cast<long double>(m.d)};
}

// displacement of the basepoint i: cosh d(i, m i) = ||m||_F^2 / 2
inline double basepoint_displacement(const Mat2& m) {
  return std::acosh(std::max(1.0, m.frobenius_sq() / 2.0));
}

struct FlatTorus {
  std::array<double, 2> u{1.0, 0.0}, v{0.0, 1.0};

  FlatTorus() = default;
  FlatTorus(std::array<double, 2> uu, std::array<double, 2> vv) : u(uu), v(vv) {
    if (std::abs(area()) < 1e-15) throw construction_error("flat torus basis is degenerate");
  }
  double area() const { return std::abs(u[0] * v[1] - u[1] * v[0]); }
};

inline double flat_class_length(const FlatTorus& t, long long p, long long q) {
  double x = p * t.u[0] + q * t.v[0];
  double y = p * t.u[1] + q * t.v[1];
  return std::hypot(x, y);
}

enum class SurfaceKind { octagon, giraffe, generic };

struct HyperbolicSurface {
  int genus = 2;
  std::vector<Mat2> generators;  // a_1, b_1, ..., a_g, b_g
  double relation_residual = 0.0;
  SurfaceKind kind = SurfaceKind::generic;

  // giraffe construction data
  std::optional<double> l_sep;
  std::vector<Word> separating_words;
  std::array<double, 4> torus_traces{0, 0, 0, 0};
  // per-factor generator matrices in well-centered coordinates, used by the
  // amalgam-mode enumerator; lengths are conjugation-invariant so only the
  // pruning geometry depends on them
  std::vector<std::array<Mat2, 2>> factor_frames;

  std::size_t alphabet() const { return 2 * static_cast<std::size_t>(genus); }
};

inline Mat2 word_matrix(const HyperbolicSurface& s, const Word& w) {
  Mat2 m;
  for (Letter l : w.ls) {
    int g = letter_generator(l);
    if (g < 0 || g >= 2 * s.genus) throw std::invalid_argument("word letter outside alphabet");
    const Mat2& gen = s.generators[g];
    m = m * (letter_is_inverse(l) ? gen.inverse() : gen);
  }
  return m;
}

// long-double product for long words where double accumulation is marginal
inline long double word_trace(const HyperbolicSurface& s, const Word& w) {
  Mat2L m;
  for (Letter l : w.ls) {
    int g = letter_generator(l);
    if (g < 0 || g >= 2 * s.genus) throw std::invalid_argument("word letter outside alphabet");
    Mat2L gen = to_long(s.generators[g]);
    m = m * (letter_is_inverse(l) ? gen.inverse() : gen);
  }
  return m.trace();
}

inline double word_geodesic_length(const HyperbolicSurface& s, const Word& w) {
  long double tr = std::abs(word_trace(s, w));
  if (tr <= 2.0L + kLengthTol)
    throw degeneracy_error("word is not a hyperbolic element (|trace| <= 2)");
  return static_cast<double>(2.0L * std::acosh(tr / 2.0L));
}

inline HomologyClass word_homology(const HyperbolicSurface& s, const Word& w) {
  std::vector<long long> e(2 * s.genus, 0);
  for (Letter l : w.ls) e[letter_generator(l)] += letter_is_inverse(l) ? -1 : 1;
  return HomologyClass(std::move(e));
}

inline double collar_halfwidth(double l) {
  if (l <= 0) throw std::invalid_argument("collar_halfwidth requires positive length");
  return std::asinh(1.0 / std::sinh(l / 2.0));
}

namespace detail {

using Cplx = std::complex<double>;
using CMat = std::array<Cplx, 4>;  // row-major 2x2 complex

inline CMat cmul(const CMat& x, const CMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
inline CMat cinv(const CMat& m) {
  Cplx det = m[0] * m[3] - m[1] * m[2];
  return {m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
}
inline Cplx capply(const CMat& m, Cplx z) { return (m[0] * z + m[1]) / (m[2] * z + m[3]); }

// unique orientation-preserving isometry of the disk with p -> pp, q -> qq
// (requires equal hyperbolic distances d(p,q) = d(pp,qq))
inline CMat disk_isometry(Cplx p, Cplx q, Cplx pp, Cplx qq) {
  auto translate = [](Cplx z) -> CMat {
    double s = 1.0 / std::sqrt(1.0 - std::norm(z));
    return {Cplx(s), -s * z, -s * std::conj(z), Cplx(s)};
  };
  CMat tp = translate(p), tpp = translate(pp);
  Cplx u = capply(tp, q), up = capply(tpp, qq);
  double phi = std::arg(up) - std::arg(u);
  CMat rot{std::polar(1.0, phi / 2), Cplx(0), Cplx(0), std::polar(1.0, -phi / 2)};
  CMat f = cmul(cmul(cinv(tpp), rot), tp);
  Cplx det = f[0] * f[3] - f[1] * f[2];
  Cplx scale = std::sqrt(det);
  for (auto& x : f) x /= scale;
  return f;
}

// conjugate a disk-model SU(1,1) matrix to an upper-half-plane SL(2,R) one
inline Mat2 disk_to_halfplane(const CMat& g) {
  const CMat k{Cplx(1), Cplx(0, -1), Cplx(1), Cplx(0, 1)};
  CMat h = cmul(cmul(cinv(k), g), k);
  Cplx det = h[0] * h[3] - h[1] * h[2];
  Cplx scale = std::sqrt(det);
  for (auto& x : h) x /= scale;
  double im = std::max({std::abs(h[0].imag()), std::abs(h[1].imag()),
                        std::abs(h[2].imag()), std::abs(h[3].imag())});
  if (im > 1e-9) {
    // a global factor of i can appear from the square root; rotate it away
    for (auto& x : h) x *= Cplx(0, 1);
    im = std::max({std::abs(h[0].imag()), std::abs(h[1].imag()),
                   std::abs(h[2].imag()), std::abs(h[3].imag())});
    if (im > 1e-9) throw construction_error("disk-to-halfplane conversion left imaginary parts");
  }
  Mat2 m{h[0].real(), h[1].real(), h[2].real(), h[3].real()};
  if (m.det() < 0) throw construction_error("disk-to-halfplane conversion flipped orientation");
  double s = std::sqrt(m.det());
  return {m.a / s, m.b / s, m.c / s, m.d / s};
}

inline Mat2 commutator(const Mat2& x, const Mat2& y) {
  return x * y * x.inverse() * y.inverse();
}

inline double residual_from_identity(const Mat2& m) {
  double rp = std::max({std::abs(m.a - 1), std::abs(m.b), std::abs(m.c), std::abs(m.d - 1)});
  double rm = std::max({std::abs(m.a + 1), std::abs(m.b), std::abs(m.c), std::abs(m.d + 1)});
  return std::min(rp, rm);
}

inline double relation_residual(const std::vector<Mat2>& gens) {
  Mat2 rel;
  for (std::size_t i = 0; i + 1 < gens.size(); i += 2)
    rel = rel * commutator(gens[i], gens[i + 1]);
  return residual_from_identity(rel);
}

}  // namespace detail

// Genus-2 surface obtained from the regular hyperbolic octagon with the
// edge identification a b a^-1 b^-1 c d c^-1 d^-1 (all eight vertices in a
// single cycle of angle 2 pi). The four side pairings have equal traces
// 2 + sqrt(2) and satisfy the standard relation exactly up to rounding.
inline HyperbolicSurface build_octagon_surface() {
  using detail::Cplx;
  const double rv = std::acosh(1.0 / std::pow(std::tan(M_PI / 8.0), 2.0));
  const double rho = std::tanh(rv / 2.0);
  std::array<Cplx, 8> v;
  for (int k = 0; k < 8; ++k) v[k] = std::polar(rho, k * M_PI / 4.0);

  std::array<detail::CMat, 4> disk_gens{
      detail::disk_isometry(v[3], v[2], v[0], v[1]),   // a
      detail::disk_isometry(v[2], v[1], v[3], v[4]),   // b
      detail::disk_isometry(v[6], v[7], v[5], v[4]),   // c
      detail::disk_isometry(v[5], v[6], v[0], v[7])};  // d

  HyperbolicSurface s;
  s.genus = 2;
  s.kind = SurfaceKind::octagon;
  for (const auto& g : disk_gens) s.generators.push_back(detail::disk_to_halfplane(g));
  s.relation_residual = detail::relation_residual(s.generators);
  if (s.relation_residual > 1e-9)
    throw construction_error("octagon construction failed the surface relation");
  return s;
}

namespace detail {

// one-holed torus group with tr A = x, tr B = y and boundary [A,B] of trace
// -2 cosh(l/2), in Fricke normal form
inline std::pair<Mat2, Mat2> fricke_torus(double x, double y, double l_sep) {
  double mu = -2.0 * std::cosh(l_sep / 2.0);
  double disc = x * x * y * y - 4.0 * (x * x + y * y - 2.0 - mu);
  if (disc < 0)
    throw construction_error("no one-holed torus with these traces and boundary length");
  double z = (x * y + std::sqrt(disc)) / 2.0;
  if (z < 2.0) throw construction_error("degenerate trace solution for the one-holed torus");
  double zeta = (z + std::sqrt(z * z - 4.0)) / 2.0;
  Mat2 am{x, -1.0, 1.0, 0.0};
  Mat2 bm{0.0, zeta, -1.0 / zeta, y};
  return {am, bm};
}

// conjugate (A,B) so that [A,B] becomes the diagonal matrix with negative
// eigenvalues, expanding axis the imaginary axis; a second pass polishes the
// eigenvector roundoff
inline std::pair<Mat2, Mat2> normalize_boundary(Mat2 am, Mat2 bm) {
  for (int pass = 0; pass < 2; ++pass) {
    Mat2 k = commutator(am, bm);
    double t = k.trace();
    if (t >= -2.0) throw construction_error("boundary element is not hyperbolic");
    double srt = std::sqrt(t * t - 4.0);
    double lam1 = (t - srt) / 2.0;  // |lam1| > 1
    double lam2 = (t + srt) / 2.0;
    auto eigvec = [&](double lam) -> std::array<double, 2> {
      std::array<double, 2> v1{k.b, lam - k.a}, v2{lam - k.d, k.c};
      double n1 = std::hypot(v1[0], v1[1]), n2 = std::hypot(v2[0], v2[1]);
      if (n1 >= n2) return {v1[0] / n1, v1[1] / n1};
      return {v2[0] / n2, v2[1] / n2};
    };
    auto u = eigvec(lam1), w = eigvec(lam2);
    double det = u[0] * w[1] - u[1] * w[0];
    if (std::abs(det) < 1e-14) throw construction_error("boundary eigenvectors are degenerate");
    if (det < 0) {
      w[0] = -w[0];
      w[1] = -w[1];
      det = -det;
    }
    double sc = std::sqrt(det);
    Mat2 p{u[0] / sc, w[0] / sc, u[1] / sc, w[1] / sc};
    Mat2 pi = p.inverse();
    am = pi * am * p;
    bm = pi * bm * p;
  }
  return {am, bm};
}

}  // namespace detail

// Genus-2 giraffe: two one-holed tori with equal boundary length l_sep,
// glued along the separating geodesic. Torus 2 is reflected to the other
// side of the gluing axis by conjugation with a half-turn, which makes the
// relation [a1,b1][a2,b2] = 1 hold exactly and fixes the twist.
inline HyperbolicSurface build_giraffe_genus2(double l_sep,
                                              std::array<double, 4> traces = {3, 3, 3, 3}) {
  if (l_sep <= 0) throw std::invalid_argument("separating length must be positive");
  auto f1 = detail::fricke_torus(traces[0], traces[1], l_sep);
  auto f2 = detail::fricke_torus(traces[2], traces[3], l_sep);
  auto [a1, b1] = detail::normalize_boundary(f1.first, f1.second);
  auto [a2raw, b2raw] = detail::normalize_boundary(f2.first, f2.second);
  const Mat2 half_turn{0.0, 1.0, -1.0, 0.0};
  Mat2 a2 = half_turn * a2raw * half_turn.inverse();
  Mat2 b2 = half_turn * b2raw * half_turn.inverse();

  HyperbolicSurface s;
  s.genus = 2;
  s.kind = SurfaceKind::giraffe;
  s.generators = {a1, b1, a2, b2};
  s.relation_residual = detail::relation_residual(s.generators);
  if (s.relation_residual > 1e-9)
    throw construction_error("giraffe gluing failed the surface relation");
  s.l_sep = l_sep;
  s.torus_traces = traces;
  s.separating_words = {Word::parse("abAB")};
  // factor frames: the Fricke-form matrices are well centered for each torus
  s.factor_frames = {{f1.first, f1.second}, {f2.first, f2.second}};

  double measured = trace_to_length(std::abs(detail::commutator(a1, b1).trace()));
  if (!len_eq(measured, l_sep))
    throw construction_error("separating geodesic length drifted from the request");
  return s;
}

inline void check_surface_invariants(const HyperbolicSurface& s) {
  if (s.generators.size() != 2 * static_cast<std::size_t>(s.genus))
    throw std::invalid_argument("surface must have 2g generators");
  for (const auto& g : s.generators)
    if (std::abs(g.det() - 1.0) > 1e-12)
      throw std::invalid_argument("surface generator determinant drifted from 1");
  if (s.relation_residual > 1e-9)
    throw std::invalid_argument("surface relation residual exceeds tolerance");
}

}  // namespace snlab
