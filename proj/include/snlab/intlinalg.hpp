#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

namespace snlab {

using Int = boost::multiprecision::cpp_int;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major list of rows

inline IMat imat_identity(std::size_t n) {
  IMat m(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

inline IVec imat_apply_left(const IVec& y, const IMat& m) {
  // y * m  (row vector times matrix)
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  if (y.size() != rows) throw std::invalid_argument("imat_apply_left: size mismatch");
  IVec r(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) r[j] += y[i] * m[i][j];
  }
  return r;
}

// Row-style Hermite normal form. Returns the canonical basis of the row
// lattice: pivots positive, entries above each pivot reduced into [0, pivot),
// zero rows dropped. Two generating sets of the same lattice produce
// identical output.
inline IMat hnf_rows(IMat a) {
  std::size_t rows = a.size();
  if (rows == 0) return a;
  std::size_t cols = a[0].size();
  std::size_t r = 0;  // current pivot row
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // eliminate below until at most one nonzero in column c at row >= r
    while (true) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (piv == rows || abs(a[i][c]) < abs(a[piv][c]))) piv = i;
      if (piv == rows) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = a[i][c] / a[r][c];
      if (a[i][c] - q * a[r][c] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

// Basis (in HNF) of { x in Z^n : A x = 0 }, columns of A indexed by x.
// Obtained by row-reducing [A^T | I]; rows whose left block vanishes carry a
// basis of the kernel in the right block. The kernel of an integer matrix is
// automatically saturated.
inline IMat kernel_basis(const IMat& a) {
  std::size_t rows = a.size();
  std::size_t n = rows == 0 ? 0 : a[0].size();
  if (rows == 0) return imat_identity(n);
  // aug = [A^T | I_n], n rows, rows + n cols
  IMat aug(n, IVec(rows + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < rows; ++j) aug[i][j] = a[j][i];
    aug[i][rows + i] = 1;
  }
  // eliminate the left block by integer row reduction
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < n; ++c) {
    while (true) {
      std::size_t piv = n;
      for (std::size_t i = r; i < n; ++i)
        if (aug[i][c] != 0 && (piv == n || abs(aug[i][c]) < abs(aug[piv][c]))) piv = i;
      if (piv == n) break;
      std::swap(aug[r], aug[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (aug[i][c] == 0) continue;
        Int q = aug[i][c] / aug[r][c];
        for (std::size_t j = 0; j < rows + n; ++j) aug[i][j] -= q * aug[r][j];
        if (aug[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (aug[r][c] != 0) ++r;
  }
  IMat ker;
  for (std::size_t i = r; i < n; ++i)
    ker.emplace_back(aug[i].begin() + rows, aug[i].end());
  return hnf_rows(ker);
}

// Smith normal form with transforms: u * a * w = d, u and w unimodular,
// d diagonal with d[i] | d[i+1].
struct SmithResult {
  IMat u, d, w;
};

inline SmithResult smith_normal_form(IMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  IMat u = imat_identity(rows), w = imat_identity(cols);
  auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
    for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
    for (std::size_t i = 0; i < cols; ++i) w[i][j] -= q * w[i][k];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(a[i], a[k]);
    std::swap(u[i], u[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][k]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(w[i][j], w[i][k]);
  };
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot of minimal absolute value
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) { pi = i; pj = j; }
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool again = false;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      row_sub(i, t, a[i][t] / a[t][t]);
      if (a[i][t] != 0) again = true;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      col_sub(j, t, a[t][j] / a[t][t]);
      if (a[t][j] != 0) again = true;
    }
    if (again) continue;
    // enforce divisibility d[t] | a[i][j]
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // add row i to row t, then restart on this pivot
          for (std::size_t l = 0; l < cols; ++l) a[t][l] += a[i][l];
          for (std::size_t l = 0; l < rows; ++l) u[t][l] += u[i][l];
          redo = true;
        }
    if (redo) continue;
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
    }
    ++t;
  }
  return {u, a, w};
}

// Solve y * basis = target where basis rows are an HNF lattice basis.
// Returns the integer coefficient vector, or nullopt when target is not in
// the row lattice.
inline std::optional<IVec> solve_in_row_lattice(const IMat& basis, IVec target) {
  std::size_t r = basis.size();
  std::size_t n = r == 0 ? target.size() : basis[0].size();
  if (target.size() != n) throw std::invalid_argument("solve_in_row_lattice: size mismatch");
  IVec y(r, 0);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < r; ++c) {
    if (basis[row][c] == 0) continue;  // pivot columns are increasing
    if (target[c] % basis[row][c] != 0) return std::nullopt;
    Int q = target[c] / basis[row][c];
    y[row] = q;
    if (q != 0)
      for (std::size_t j = 0; j < n; ++j) target[j] -= q * basis[row][j];
    ++row;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (target[j] != 0) return std::nullopt;
  return y;
}

// Inverse of a unimodular integer matrix via the SNF transforms:
// u * m * w = I implies m^{-1} = w * u.
inline IMat imat_inverse_unimodular(const IMat& m) {
  auto s = smith_normal_form(m);
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    if (s.d[i][i] != 1) throw std::invalid_argument("imat_inverse_unimodular: matrix not unimodular");
  return imat_mul(s.w, s.u);
}

// Given a saturated rank-r lattice basis S (r x n), return a unimodular
// n x n matrix whose first r rows span the same lattice. From the Smith
// decomposition u S w = [I 0], the rows of w^{-1} provide the completion.
inline IMat complete_to_unimodular(const IMat& s_basis) {
  std::size_t r = s_basis.size();
  if (r == 0) throw std::invalid_argument("complete_to_unimodular: empty basis");
  std::size_t n = s_basis[0].size();
  auto s = smith_normal_form(s_basis);
  for (std::size_t i = 0; i < r; ++i)
    if (s.d[i][i] != 1)
      throw std::invalid_argument("complete_to_unimodular: basis is not saturated");
  // u S w = [I_r | 0]  =>  S = u^{-1} [I 0] w^{-1}, so the first r rows of
  // w^{-1} span the same lattice as S and the remaining rows complete them.
  (void)n;
  return imat_inverse_unimodular(s.w);
}

inline Int imat_det(const IMat& m) {
  // fraction-free Gaussian elimination (Bareiss)
  IMat a = m;
  std::size_t n = a.size();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? Int(1) : Int(sign) * a[n - 1][n - 1];
}

}  // namespace snlab
