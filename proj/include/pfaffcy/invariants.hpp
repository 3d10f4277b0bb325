#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/modgeom.hpp"

namespace pfaffcy {

/// Chern classes of E as integer multiples of h, h^2, h^3.
struct ChernData {
  std::int64_t c1 = 0, c2 = 0, c3 = 0;
};

/// c(E) = prod (1 + d_i h) / (1 + h)^q, truncated after h^3.
ChernData chern_classes(const BundleKernelSpec& spec);

struct BundleSpec {
  int n = 0;
  int rank = 1;
  int r = 0;
  std::int64_t c1 = 0, c2 = 0, c3 = 0;
  std::int64_t s = 0;
  int t = 1;

  static BundleSpec from_kernel(const BundleKernelSpec& spec);
  static BundleSpec make(int n, int r, std::int64_t c1, std::int64_t c2, std::int64_t c3);
  void check() const;
};

std::int64_t pfaffian_degree(const BundleSpec& b);
std::int64_t canonical_degree_check(const BundleSpec& b);

std::int64_t fixed_family_dimension(std::int64_t h0, std::int64_t end_dim);

struct FamilySpec {
  int k = 0;
  int p = 16;
  int q = 3;
  int n = 6;
  int dim_mk = 0;
  std::int64_t h0 = 0;
  std::int64_t end_dim = 0;
};

/// Dimension of the stratum B_k of 16-dimensional subspaces of W3 (x) P7
/// containing the graph of a map of the kind attached to k (8, 9, 11):
/// parameters of the graph plus the subspaces containing its span.
int stratum_dimension(int k);

std::int64_t tonoli_family_dimension(const FamilySpec& f);
std::int64_t hodge_bound(const FamilySpec& f);
/// Lower bound for h^{1,1} of a degree 17 Calabi-Yau from a bound on h^{1,2}.
std::int64_t picard_bound(int degree, std::int64_t h12_bound);

struct DimsRow {
  int k = 0;
  int dim_mk = 0;
  std::int64_t tonoli = 0;
  std::int64_t hodge = 0;
  std::optional<std::int64_t> picard;
};
DimsRow dims_row(int k);

enum class VerifyLevel { fast, slice, full };
std::string to_string(VerifyLevel v);
VerifyLevel verify_level_from_string(const std::string& s);

struct Expectation {
  int proj_dim = 3;
  std::int64_t degree = 0;
  /// Expected h^1(I_X(j)) for j = 1, 2, ... (empty: not checked).
  std::vector<std::int64_t> hr;
  std::optional<std::int64_t> canonical;
  std::optional<std::int64_t> formula_degree;
};

struct Report {
  std::string family;
  Coeff prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::optional<int> k;
  std::string bundle_label;
  std::optional<int> section_dim;
  int ambient_vars = 0;
  int proj_dim = -1;
  std::int64_t degree = 0;
  std::int64_t slice_degree = 0;
  std::optional<std::int64_t> formula_degree;
  std::optional<std::int64_t> canonical;
  HilbertPolynomial hp;
  std::vector<std::int64_t> hr;  // j = 1..4
  bool max_rank = false;
  VerifyLevel level = VerifyLevel::slice;
  std::optional<ProbeReport> probe;
  std::optional<DimsRow> dims;
  std::optional<std::int64_t> end_dim;
  std::optional<std::int64_t> fixed_family_dim;
  bool interpretation_dependent = false;
  std::string ideal_structure = "saturated principal Pfaffians";
  bool passed = false;
  std::string failure;
  std::map<std::string, double> timings;

  /// Throws Errc::report_inconsistency when the stored fields contradict
  /// each other (degree vs Hilbert polynomial, pass without codimension 3).
  void check_consistency() const;
};

/// Runs the Hilbert data, Hartshorne-Rao, maximal rank and smoothness
/// checks on a saturated ideal; a failing check names itself in `failure`.
Report verify_variety(const Ideal& i, const Expectation& e, VerifyLevel level, ProbeMode probe, std::uint64_t seed);

}  // namespace pfaffcy
