// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pfaffcy/construct.hpp"
#include "pfaffcy/invariants.hpp"
#include "pfaffcy/pipeline.hpp"

using namespace pfaffcy;

namespace {

using Clock = std::chrono::steady_clock;

// pinned limits, seconds
constexpr double kCheapRowLimit = 60;
constexpr double kKernelRowLimit = 15 * 60;
constexpr double kDegree17Limit = 2 * 60 * 60;
constexpr double kPropertySuiteLimit = 5 * 60;

struct Timed {
  Artifact a;
  double seconds = 0;
};

std::map<std::string, Timed> g_runs;

const Timed& run(const std::string& family, VerifyLevel level = VerifyLevel::slice) {
  const std::string key = family + "/" + to_string(level);
  auto it = g_runs.find(key);
  if (it != g_runs.end()) return it->second;
  RunConfig cfg;
  cfg.family = family;
  cfg.seed = 1;
  cfg.level = level;
  auto t0 = Clock::now();
  Artifact a = run_family(cfg);
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return g_runs.emplace(key, Timed{std::move(a), s}).first->second;
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string summary(const std::string& tag, const Timed& t) {
  std::ostringstream o;
  const Report& r = t.a.report;
  o << tag << " (" << r.proj_dim << "," << r.degree << ") " << std::fixed;
  o.precision(1);
  o << t.seconds << "s";
  if (!r.passed) o << " failure: " << r.failure;
  return o.str();
}

void table_rows(Verdict& v, const std::vector<std::pair<std::string, std::pair<int, int>>>& rows, VerifyLevel level, double limit,
                bool surfaces_full) {
  for (const auto& [tag, want] : rows) {
    const Timed& t = run(tag, level);
    const Report& r = t.a.report;
    v.detail << " " << summary(tag, t) << ";";
    v.require(r.passed, tag + " did not pass");
    v.require(r.proj_dim == want.first && r.degree == want.second, tag + " (dim, deg)");
    v.require(t.seconds < limit, tag + " time");
    if (surfaces_full && want.first == 2)
      v.require(r.probe && r.probe->mode == ProbeMode::full && r.probe->passed(), tag + " full singular-locus check");
  }
}

Verdict c1() {
  Verdict v;
  table_rows(v, {{"dp3", {2, 3}}, {"dp4", {2, 4}}, {"dp5", {2, 5}}, {"cy12", {3, 12}}, {"cy13", {3, 13}}, {"cy14", {3, 14}}},
             VerifyLevel::slice, kCheapRowLimit, true);
  return v;
}

Verdict c2() {
  Verdict v;
  table_rows(v, {{"dp6", {2, 6}}, {"dp7", {2, 7}}, {"cy15", {3, 15}}, {"cy16", {3, 16}}}, VerifyLevel::slice, kKernelRowLimit, false);
  return v;
}

void degree17_checks(Verdict& v, const std::string& tag, int k) {
  const Timed& t = run(tag);
  const Report& r = t.a.report;
  v.detail << " " << summary(tag, t) << " k " << t.a.fibers.value_or(-1) << " h0 " << r.section_dim.value_or(-1) << ";";
  v.require(t.a.fibers == k, tag + " fiber count");
  v.require(r.section_dim == k, tag + " section-space dim");
  v.require(r.proj_dim == 3 && r.degree == 17, tag + " (dim, deg)");
  v.require(r.slice_degree == 17, tag + " slicing degree");
  v.require(r.probe && r.probe->mode == ProbeMode::slice && r.probe->passed(), tag + " slice smoothness");
  v.require(r.passed, tag + " did not pass");
  v.require(t.seconds < kDegree17Limit, tag + " time");
}

Verdict c3() {
  Verdict v;
  for (int k : {8, 9, 11}) degree17_checks(v, "cy17-k" + std::to_string(k), k);
  return v;
}

Verdict c4() {
  Verdict v;
  for (const char* tag : {"dp8-k6", "dp8-k7"}) {
    const Timed& t = run(tag, VerifyLevel::full);
    const Report& r = t.a.report;
    v.detail << " " << summary(tag, t) << " hr (" << r.hr.at(0) << "," << r.hr.at(1) << ");";
    v.require(r.proj_dim == 2 && r.degree == 8, std::string(tag) + " (dim, deg)");
    v.require(r.hr.at(0) == 3 && r.hr.at(1) == 4, std::string(tag) + " HR function");
    v.require(r.probe && r.probe->mode == ProbeMode::full && r.probe->passed(), std::string(tag) + " full smoothness");
    v.require(r.passed, std::string(tag) + " did not pass");
  }
  return v;
}

Verdict c5() {
  Verdict v;
  int equal = 0;
  for (const char* tag : {"dp3", "dp4", "dp5", "dp6", "dp7", "cy12", "cy13", "cy14", "cy15", "cy16", "cy17-k8", "cy17-k9", "cy17-k11"}) {
    const Timed& t = run(tag);
    if (!t.a.spec) {
      v.require(false, std::string(tag) + " has no bundle");
      continue;
    }
    const std::int64_t formula = pfaffian_degree(BundleSpec::from_kernel(*t.a.spec));
    const bool certified = t.a.report.slice_degree == t.a.report.degree && t.a.report.proj_dim >= 0;
    if (formula == t.a.report.degree && certified)
      ++equal;
    else
      v.require(false, std::string(tag) + " formula " + std::to_string(formula) + " vs " + std::to_string(t.a.report.degree));
  }
  v.detail << " " << equal << "/13 equalities";
  v.require(equal == 13, "count");
  return v;
}

Verdict c6() {
  Verdict v;
  const int ks[] = {8, 9, 11};
  const int dims[] = {72, 71, 70};
  const int hodge[] = {23, 23, 24};
  for (int i = 0; i < 3; ++i) {
    DimsRow d = dims_row(ks[i]);
    v.detail << " k " << d.k << ": dim " << d.dim_mk << " hodge " << d.hodge << " picard " << (d.picard ? std::to_string(*d.picard) : "-") << ";";
    v.require(d.dim_mk == dims[i], "stratum dim");
    v.require(d.hodge == hodge[i], "hodge bound");
  }
  auto p = dims_row(11).picard;
  v.require(p && *p >= 2, "picard bound for k = 11");
  return v;
}

Verdict c7() {
  Verdict v;
  for (const char* tag : {"m10", "k11-type2"}) {
    const Report& r = run(tag).a.report;
    v.detail << " " << tag << ": " << r.failure << ";";
    const bool diag = r.failure.rfind("codimension", 0) == 0 || r.failure.rfind("generic-rank", 0) == 0;
    v.require(!r.passed && diag, std::string(tag) + " diagnostic");
  }
  for (const char* tag : {"generic-cy", "generic-dp"}) {
    const Timed& t = run(tag);
    v.detail << " " << tag << ": k " << t.a.fibers.value_or(-1) << " h0 " << t.a.report.section_dim.value_or(-1) << ";";
    v.require(t.a.fibers == 0 && t.a.report.section_dim == 0 && !t.a.report.passed, std::string(tag) + " empty");
  }
  return v;
}

Verdict c8() {
  Verdict v;
  degree17_checks(v, "ext-k6", 9);
  degree17_checks(v, "ext-k7", 11);
  // dP -> CY -> dP keeps the fibre count
  for (auto [kind, k, up] : {std::tuple{GraphKind::dp_veronese2, 6, 9}, std::tuple{GraphKind::dp_linear, 7, 11}}) {
    TensorSubspace s = build_graph_subspace(kind, 1);
    TensorSubspace e = extend_dp_to_cy(s, 1);
    TensorSubspace back = cy_to_dp(e, 1);
    const int k0 = fiber_count(lambda_on_p2(s), Side::dp).k;
    const int k1 = fiber_count(lambda_on_p2(e), Side::cy).k;
    const int k2 = fiber_count(lambda_on_p2(back), Side::dp).k;
    v.detail << " " << k0 << "->" << k1 << "->" << k2 << ";";
    v.require(k0 == k && k1 == up && k2 == k, "round trip " + std::to_string(k));
  }
  for (auto [tag, k] : {std::pair{"res-k8", 6}, std::pair{"res-k9", 6}, std::pair{"res-k11", 7}}) {
    const Timed& t = run(tag);
    v.detail << " " << tag << " k " << t.a.fibers.value_or(-1) << ";";
    v.require(t.a.fibers == k, std::string(tag) + " fiber count");
  }
  return v;
}

std::string join(const std::vector<std::int64_t>& x) {
  std::string s = "(";
  for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

Verdict c9() {
  Verdict v;
  for (const char* tag : {"cy17-k8", "cy17-k9", "cy17-k11"}) {
    const Artifact& a = run(tag).a;
    if (!a.ideal || !a.spec) {
      v.require(false, std::string(tag) + " produced no variety");
      continue;
    }
    HyperplaneCheck h = hyperplane_consistency(a, 1);
    v.detail << " " << tag << " " << join(h.from_presentation) << " vs " << join(h.from_ideal) << ";";
    v.require(h.agree() && h.from_ideal.size() == 3, std::string(tag) + " mismatch");
  }
  return v;
}

Verdict c10() {
  Verdict v;
  auto t0 = Clock::now();
  const std::string cmd = std::string("\"") + PROPERTY_TESTS_PATH + "\" --minimal > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail << " exit " << rc << " in " << s << "s";
  v.require(rc == 0, "property suite failed");
  v.require(s < kPropertySuiteLimit, "time");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"cheap table rows", c1},       {"kernel table rows", c2},    {"degree 17 families", c3},
      {"del Pezzo 8", c4},            {"degree formula", c5},       {"dimension and Hodge arithmetic", c6},
      {"negative controls", c7},      {"dP/CY round trip", c8},     {"hyperplane restriction", c9},
      {"property suites", c10},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what();
    }
    if (!v.pass) ++failed;
    std::printf("criterion %zu [PRIMARY] %s: %s --%s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
