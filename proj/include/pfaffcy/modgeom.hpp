#pragma once

#include <cstdint>
#include <vector>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/polymat.hpp"

namespace pfaffcy {

/// Graded free presentation: `map` sends the source generators (columns, in
/// degrees col_twists) to the target generators (rows, in degrees
/// row_twists). The shifted Hartshorne-Rao presentations are p S -> q S(1):
/// columns in degree 0, rows in degree -1, linear entries.
struct Presentation {
  PolyMat map;

  static Presentation linear(const PolyMat& m);
  int source_rank() const { return map.cols(); }
  int target_rank() const { return map.rows(); }
};

/// dim of the degree-d part of coker(map).
std::int64_t coker_hilbert(const Presentation& pr, int d);

/// Columns span {h = 0}: substituting x = chart * y restricts to the
/// hyperplane in the coordinates y of one fewer variable.
Matrix hyperplane_chart(const Poly& h);

Presentation restrict_hyperplane(const Presentation& pr, const Poly& h);
Ideal restrict_ideal(const Ideal& i, const Poly& h);

/// h^1(I_X(j)) = hp(j) - HF(j) for j in [from, to]; requires vanishing of
/// higher cohomology of O_X(j) for j >= 1. Negative values throw.
std::vector<std::int64_t> hr_function(const Ideal& i_sat, const HilbertPolynomial& hp, int from, int to);

/// Same with explicit section counts h^0(O_X(j)), j = from..to, for
/// varieties where hp(j) differs from h^0(O_X(j)).
std::vector<std::int64_t> hr_function_from_sections(const Ideal& i_sat, const std::vector<std::int64_t>& h0, int from);

bool maximal_rank_check(const Ideal& i_sat, const HilbertPolynomial& hp, int from, int to);

/// F0 = sum O(twists[i]); E = ker(constraint : F0 -> sum O(1)) or F0 itself
/// when the constraint has no rows.
struct BundleKernelSpec {
  Ring ring;
  std::vector<int> twists;
  PolyMat constraint;

  static BundleKernelSpec direct_sum(const Ring& ring, std::vector<int> twists);
  static BundleKernelSpec kernel(const PolyMat& constraint);

  int cover_rank() const { return static_cast<int>(twists.size()); }
  int constraint_rows() const { return constraint.rows(); }
  int rank() const { return cover_rank() - constraint_rows(); }
  int r() const { return (rank() - 1) / 2; }
};

std::int64_t end_dimension(const BundleKernelSpec& spec, std::uint64_t seed = 0);

}  // namespace pfaffcy
