#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaffcy/construct.hpp"
#include "pfaffcy/invariants.hpp"

namespace pfaffcy {

/// Family tags accepted by construct: table rows dp3..dp7, cy12..cy16; the
/// degree 8 del Pezzos dp8-k6, dp8-k7; degree 17 strata cy17-k8, cy17-k9,
/// cy17-k11; special strata m7, m10, k11-type2, skew-k9; projection-t1,
/// projection-o2o3, projection-o1o4; extensions ext-k6, ext-k7 of the dP
/// builders; restrictions res-k8, res-k9, res-k11 of the CY builders;
/// generic-cy and generic-dp.
std::vector<std::string> family_tags();
bool is_family_tag(const std::string& tag);

struct FamilyInfo {
  int proj_dim = 3;
  int degree = 0;
  /// Expected fibre count (-1 when the family is not built from a subspace).
  int k = -1;
  bool degree17 = false;
};
FamilyInfo family_info(const std::string& tag);

/// Surfaces always get the complete singular-locus check; threefolds only
/// at level full.
ProbeMode probe_mode_for(const FamilyInfo& info, VerifyLevel level);

struct RunConfig {
  std::string family;
  Coeff prime = kDefaultPrime;
  std::uint64_t seed = 1;
  VerifyLevel level = VerifyLevel::slice;
  bool force = false;
};

struct Artifact {
  RunConfig config;
  std::optional<TensorSubspace> subspace;
  std::optional<int> fibers;
  std::string fiber_label;
  std::optional<BundleKernelSpec> spec;
  std::optional<SkewSection> section;
  std::optional<Ideal> ideal;
  Expectation expected;
  Report report;
};

/// Builds, solves and verifies one family. Construction failures such as a
/// wrong generic rank are recorded in the report rather than thrown; invalid
/// configurations throw.
Artifact run_family(const RunConfig& cfg);

/// Expected h^1(I_X(j)), j = 1..4, from the constraint: the shifted cokernel
/// of the constraint matrix in degree j - s.
std::vector<std::int64_t> expected_hr(const BundleKernelSpec& spec);

/// Hartshorne-Rao values on a hyperplane section, j = 1..3, from the
/// restricted presentation and from the restricted ideal.
struct HyperplaneCheck {
  std::vector<std::int64_t> from_presentation;
  std::vector<std::int64_t> from_ideal;
  bool agree() const { return from_presentation == from_ideal; }
};
HyperplaneCheck hyperplane_consistency(const Artifact& a, std::uint64_t seed);

std::string artifact_to_json(const Artifact& a, bool with_timings = true);

/// Re-runs the checks from the serialized ideal alone and compares the
/// result with the stored report. The returned report fails with a
/// "report inconsistency" reason when the two differ.
Report verify_artifact_json(const std::string& text);

std::string report_to_json(const Report& r, bool with_timings = true);

/// JSON polynomial wire format.
std::string polys_to_json(const std::vector<Poly>& polys);
std::vector<Poly> polys_from_json(const std::string& text);

}  // namespace pfaffcy
