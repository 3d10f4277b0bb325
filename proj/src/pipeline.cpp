#include "pfaffcy/pipeline.hpp"

#include <chrono>

namespace pfaffcy {

namespace {

struct FamilyEntry {
  const char* tag;
  FamilyInfo info;
};

const FamilyEntry kFamilies[] = {
    {"dp3", {2, 3, -1, false}},          {"dp4", {2, 4, -1, false}},          {"dp5", {2, 5, -1, false}},
    {"dp6", {2, 6, -1, false}},          {"dp7", {2, 7, -1, false}},          {"dp8-k6", {2, 8, 6, false}},
    {"dp8-k7", {2, 8, 7, false}},        {"cy12", {3, 12, -1, false}},        {"cy13", {3, 13, -1, false}},
    {"cy14", {3, 14, -1, false}},        {"cy15", {3, 15, -1, false}},        {"cy16", {3, 16, -1, false}},
    {"cy17-k8", {3, 17, 8, true}},       {"cy17-k9", {3, 17, 9, true}},       {"cy17-k11", {3, 17, 11, true}},
    {"m7", {3, 17, 7, true}},            {"m10", {3, 17, 10, true}},          {"k11-type2", {3, 17, 11, true}},
    {"skew-k9", {3, 17, 9, true}},       {"projection-t1", {3, 17, 8, true}}, {"projection-o2o3", {3, 17, 9, true}},
    {"projection-o1o4", {3, 17, 11, true}}, {"ext-k6", {3, 17, 9, true}},    {"ext-k7", {3, 17, 11, true}},
    {"res-k8", {2, 8, 6, false}},        {"res-k9", {2, 8, 6, false}},        {"res-k11", {2, 8, 7, false}},
    {"generic-cy", {3, 17, 0, true}},    {"generic-dp", {2, 8, 0, false}},
};

TensorSubspace build_subspace(const std::string& tag, std::uint64_t seed, const PrimeField& f) {
  if (tag == "dp8-k6") return build_graph_subspace(GraphKind::dp_veronese2, seed, f);
  if (tag == "dp8-k7") return build_graph_subspace(GraphKind::dp_linear, seed, f);
  if (tag == "cy17-k8") return build_graph_subspace(GraphKind::cubic_basepoint, seed, f);
  if (tag == "cy17-k9") return build_graph_subspace(GraphKind::veronese2, seed, f);
  if (tag == "cy17-k11") return build_graph_subspace(GraphKind::linear, seed, f);
  if (tag == "m7") return special_builder(GraphKind::m7, seed, f);
  if (tag == "m10") return special_builder(GraphKind::m10, seed, f);
  if (tag == "k11-type2") return special_builder(GraphKind::k11_type2, seed, f);
  if (tag == "skew-k9") return special_builder(GraphKind::skew_k9, seed, f);
  if (tag == "projection-t1") return build_by_projection(BundleType::tangent_twist, seed, f);
  if (tag == "projection-o2o3") return build_by_projection(BundleType::o2_o3, seed, f);
  if (tag == "projection-o1o4") return build_by_projection(BundleType::o1_o4, seed, f);
  if (tag == "ext-k6") return extend_dp_to_cy(build_graph_subspace(GraphKind::dp_veronese2, seed, f), seed);
  if (tag == "ext-k7") return extend_dp_to_cy(build_graph_subspace(GraphKind::dp_linear, seed, f), seed);
  if (tag == "res-k8") return cy_to_dp(build_graph_subspace(GraphKind::cubic_basepoint, seed, f), seed);
  if (tag == "res-k9") return cy_to_dp(build_graph_subspace(GraphKind::veronese2, seed, f), seed);
  if (tag == "res-k11") return cy_to_dp(build_graph_subspace(GraphKind::linear, seed, f), seed);
  if (tag == "generic-cy") return build_generic_subspace(Side::cy, seed, f);
  if (tag == "generic-dp") return build_generic_subspace(Side::dp, seed, f);
  throw Error(Errc::invalid_argument, "no subspace builder for family '" + tag + "'");
}

const char* failure_category(Errc c) {
  switch (c) {
    case Errc::wrong_generic_rank: return "generic-rank";
    case Errc::codimension: return "codimension";
    case Errc::degenerate_sample: return "degenerate";
    case Errc::not_a_bundle: return "not-a-bundle";
    case Errc::positive_dimensional: return "positive-dimensional";
    default: return nullptr;
  }
}

}  // namespace

std::vector<std::string> family_tags() {
  std::vector<std::string> out;
  for (const auto& fe : kFamilies) out.emplace_back(fe.tag);
  return out;
}

bool is_family_tag(const std::string& tag) {
  for (const auto& fe : kFamilies)
    if (tag == fe.tag) return true;
  return false;
}

FamilyInfo family_info(const std::string& tag) {
  for (const auto& fe : kFamilies)
    if (tag == fe.tag) return fe.info;
  throw Error(Errc::invalid_argument, "unknown family '" + tag + "'");
}

std::vector<std::int64_t> expected_hr(const BundleKernelSpec& spec) {
  std::vector<std::int64_t> hr(4, 0);
  if (spec.constraint_rows() == 0) return hr;
  const std::int64_t s = BundleSpec::from_kernel(spec).s;
  Presentation pr{spec.constraint};
  for (int j = 1; j <= 4; ++j) hr[j - 1] = coker_hilbert(pr, static_cast<int>(j - s));
  return hr;
}

ProbeMode probe_mode_for(const FamilyInfo& info, VerifyLevel level) {
  // the complete singular locus is cheap on surfaces and always run there
  if (info.proj_dim == 2 || level == VerifyLevel::full) return ProbeMode::full;
  return ProbeMode::slice;
}

Artifact run_family(const RunConfig& cfg) {
  using clk = std::chrono::steady_clock;
  const FamilyInfo info = family_info(cfg.family);
  if (cfg.prime <= 3 || !is_prime(cfg.prime)) throw Error(Errc::invalid_argument, "prime must be an odd prime > 3");
  if (info.degree17 && cfg.level == VerifyLevel::full && !cfg.force)
    throw Error(Errc::invalid_argument, "full verification of a degree 17 family is refused without --force");
  const PrimeField f(cfg.prime);
  const auto start = clk::now();
  Artifact a;
  a.config = cfg;
  a.expected.proj_dim = info.proj_dim;
  a.expected.degree = info.degree;
  Report rep;
  bool interpretation = false;
  std::map<std::string, double> timings;
  auto lap = [&](const char* name, clk::time_point t) { timings[name] = std::chrono::duration<double>(clk::now() - t).count(); };
  try {
    auto t = clk::now();
    if (auto row = table_row_from_string(cfg.family)) {
      a.spec = table_row_spec(*row, cfg.seed, f);
    } else {
      TensorSubspace s = build_subspace(cfg.family, cfg.seed, f);
      FiberCount fc = fiber_count(lambda_on_p2(s), s.side);
      a.fibers = fc.k;
      a.fiber_label = fc.label;
      interpretation = s.interpretation_dependent;
      a.spec = BundleKernelSpec::kernel(matrix_on_pn(s));
      a.subspace = std::move(s);
    }
    lap("construct", t);
    t = clk::now();
    SectionSpace space(*a.spec);
    rep.section_dim = space.dim();
    lap("sections", t);
    const BundleSpec bs = BundleSpec::from_kernel(*a.spec);
    a.expected.hr = expected_hr(*a.spec);
    a.expected.canonical = canonical_degree_check(bs);
    a.expected.formula_degree = pfaffian_degree(bs);
    t = clk::now();
    rep.end_dim = end_dimension(*a.spec, cfg.seed);
    rep.fixed_family_dim = fixed_family_dimension(space.dim(), *rep.end_dim);
    lap("end", t);
    if (space.dim() == 0) {
      rep.failure = "empty section space: no Pfaffian section";
    } else {
      t = clk::now();
      a.section = random_section(space, cfg.seed);
      PfaffianLocus loc = pfaffian_locus(*a.section, *a.spec, cfg.seed);
      lap("pfaffians", t);
      // verified from the bare generator list, exactly as a stored artifact is
      a.ideal = Ideal(loc.ideal.ring(), loc.ideal.generators());
      Report v = verify_variety(*a.ideal, a.expected, cfg.level, probe_mode_for(info, cfg.level), cfg.seed);
      v.section_dim = rep.section_dim;
      v.end_dim = rep.end_dim;
      v.fixed_family_dim = rep.fixed_family_dim;
      rep = std::move(v);
    }
  } catch (const Error& e) {
    const char* cat = failure_category(e.code());
    if (!cat) throw;
    rep.failure = std::string(cat) + ": " + e.what();
  }
  if (rep.hr.size() != 4) rep.hr.assign(4, 0);
  if (!rep.formula_degree) rep.formula_degree = a.expected.formula_degree;
  if (!rep.canonical) rep.canonical = a.expected.canonical;
  rep.passed = rep.failure.empty();
  rep.family = cfg.family;
  rep.prime = cfg.prime;
  rep.seed = cfg.seed;
  rep.level = cfg.level;
  if (a.spec) rep.ambient_vars = a.spec->ring.nvars;
  rep.k = a.fibers;
  rep.bundle_label = a.fiber_label;
  rep.interpretation_dependent = interpretation;
  if (info.degree17 && a.fibers && (*a.fibers == 8 || *a.fibers == 9 || *a.fibers == 11)) rep.dims = dims_row(*a.fibers);
  if (info.k >= 0 && a.fibers && *a.fibers != info.k) {
    if (rep.failure.empty()) rep.failure = "fibre count " + std::to_string(*a.fibers) + " instead of " + std::to_string(info.k);
    rep.passed = false;
  }
  if (a.fibers && rep.section_dim && *rep.section_dim != *a.fibers && rep.passed) {
    rep.failure = "section space dimension differs from the fibre count";
    rep.passed = false;
  }
  for (const auto& [name, sec] : timings) rep.timings[name] = sec;
  rep.timings["total"] = std::chrono::duration<double>(clk::now() - start).count();
  a.report = std::move(rep);
  return a;
}

HyperplaneCheck hyperplane_consistency(const Artifact& a, std::uint64_t seed) {
  if (!a.spec || !a.ideal) throw Error(Errc::invalid_argument, "hyperplane check needs a constraint and an ideal");
  const Ring& ring = a.ideal->ring();
  Rng rng(seed ^ 0x4E7u);
  const Poly h = random_form(ring, 1, rng);
  const std::int64_t s = BundleSpec::from_kernel(*a.spec).s;
  HyperplaneCheck out;
  Presentation restricted = restrict_hyperplane(Presentation{a.spec->constraint}, h);
  for (int j = 1; j <= 3; ++j) out.from_presentation.push_back(coker_hilbert(restricted, static_cast<int>(j - s)));
  // h^0(O_Y(j)) = h^0(O_X(j)) - h^0(O_X(j - 1)), using h^1(O_X(i)) = 0 for i >= 0
  const HilbertPolynomial hp = a.ideal->hilbert_polynomial();
  auto h0x = [&](int j) { return j == 0 ? std::int64_t{1} : hp(j); };
  std::vector<std::int64_t> h0y;
  for (int j = 1; j <= 3; ++j) h0y.push_back(h0x(j) - h0x(j - 1));
  Ideal y = saturate_irrelevant(restrict_ideal(*a.ideal, h), seed);
  out.from_ideal = hr_function_from_sections(y, h0y, 1);
  return out;
}

}  // namespace pfaffcy
