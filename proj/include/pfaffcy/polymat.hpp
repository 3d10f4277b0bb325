#pragma once

#include <span>
#include <vector>

#include "pfaffcy/linalg.hpp"
#include "pfaffcy/poly.hpp"

namespace pfaffcy {

/// Matrix of polynomials with graded shifts: entry (i, j) is zero or
/// homogeneous of degree col_twists[j] - row_twists[i].
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(const Ring& ring, int rows, int cols);
  PolyMat(const Ring& ring, std::vector<int> row_twists, std::vector<int> col_twists, bool skew = false);

  const Ring& ring() const noexcept { return ring_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool skew() const noexcept { return skew_; }
  const std::vector<int>& row_twists() const noexcept { return row_twists_; }
  const std::vector<int>& col_twists() const noexcept { return col_twists_; }
  /// Expected degree of entry (i, j).
  int entry_degree(int i, int j) const { return col_twists_[j] - row_twists_[i]; }

  const Poly& at(int i, int j) const { return entries_[std::size_t(i) * cols_ + j]; }
  /// Sets (i, j); for skew matrices also sets (j, i) to the negative.
  void set(int i, int j, Poly p);

  /// Throws Errc::invalid_argument if an entry violates the grading or skewness.
  void check() const;

  PolyMat transpose() const;
  PolyMat substitute(std::span<const Poly> images) const;
  Matrix evaluate(std::span<const Coeff> point) const;
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b);

 private:
  Ring ring_;
  int rows_ = 0;
  int cols_ = 0;
  bool skew_ = false;
  std::vector<int> row_twists_;
  std::vector<int> col_twists_;
  std::vector<Poly> entries_;
};

/// Pfaffian of the principal submatrix on `support` (sorted, even size).
Poly pfaffian(const PolyMat& a, std::span<const int> support);

/// All principal Pfaffians of the given even size, supports in
/// lexicographic order.
std::vector<Poly> principal_pfaffians(const PolyMat& a, int size);

/// All size x size minors: row subsets lexicographically, then column subsets.
std::vector<Poly> minors_ideal(const PolyMat& m, int size);

Poly determinant(const PolyMat& m);

/// Matrix of partial derivatives d polys[i] / d x_{vars[j]}.
PolyMat jacobian(std::span<const Poly> polys, std::span<const int> vars);
PolyMat jacobian(std::span<const Poly> polys);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace pfaffcy
