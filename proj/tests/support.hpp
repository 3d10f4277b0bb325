#pragma once

#include <vector>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/polymat.hpp"

namespace testing {

using namespace pfaffcy;

inline std::vector<Coeff> random_point(const PrimeField& f, int n, Rng& rng) {
  std::vector<Coeff> x(n);
  for (auto& c : x) c = rng.element(f);
  return x;
}

inline Matrix random_matrix(const PrimeField& f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.element(f);
  return m;
}

// rows x cols matrix of rank at most r (product of random factors)
inline Matrix random_rank_matrix(const PrimeField& f, int rows, int cols, int r, Rng& rng) {
  return random_matrix(f, rows, r, rng) * random_matrix(f, r, cols, rng);
}

// skew matrix with entry (i, j) of degree 1 + twist_i + twist_j
inline PolyMat random_skew(const Ring& ring, const std::vector<int>& twists, Rng& rng) {
  std::vector<int> rows, cols;
  for (int t : twists) {
    rows.push_back(-t);
    cols.push_back(t + 1);
  }
  PolyMat a(ring, rows, cols, true);
  const int n = static_cast<int>(twists.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = 1 + twists[i] + twists[j];
      if (d >= 0) a.set(i, j, random_form(ring, d, rng));
    }
  return a;
}

inline PolyMat random_linear(const Ring& ring, int rows, int cols, Rng& rng) {
  PolyMat m(ring, std::vector<int>(rows, 0), std::vector<int>(cols, 1));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, random_form(ring, 1, rng));
  return m;
}

// Rank by elimination on the transpose with full pivot search, used as an
// oracle independent of the library's row reduction.
inline int oracle_rank(const Matrix& m) {
  const PrimeField& f = m.field();
  std::vector<std::vector<Coeff>> a(m.cols(), std::vector<Coeff>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[j][i] = m(i, j);
  const int rows = m.cols(), cols = m.rows();
  int r = 0;
  for (int c = cols - 1; c >= 0 && r < rows; --c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (!a[i][c]) continue;
      // fraction-free step: row_i <- a_rc * row_i - a_ic * row_r
      const Coeff p = a[r][c], q = a[i][c];
      for (int k = 0; k < cols; ++k) a[i][k] = f.sub(f.mul(p, a[i][k]), f.mul(q, a[r][k]));
    }
    ++r;
  }
  return r;
}

// Brute force dim (S/I)_d: rank of all monomial multiples of the generators.
inline std::int64_t oracle_hilbert(const Ring& ring, const std::vector<Poly>& gens, int d) {
  auto monos = monomials_of_degree(ring, d);
  auto idx = index_of(monos);
  Matrix m(ring.field, 0, static_cast<int>(monos.size()));
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& mu : monomials_of_degree(ring, d - g.degree())) {
      std::vector<Coeff> row(monos.size(), 0);
      for (const auto& t : g.terms()) row[idx.at(t.m * mu)] = t.c;
      m.append_row(row);
    }
  }
  return static_cast<std::int64_t>(monos.size()) - (m.rows() ? oracle_rank(m) : 0);
}

}  // namespace testing
