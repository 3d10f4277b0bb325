// pfaffcy command line: construct, verify, dims, families.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pfaffcy.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

int report_error(int rc, const char* what) {
  std::cerr << "pfaffcy: " << what << ": " << pfaffcy_error_description(rc);
  if (*pfaffcy_last_error()) std::cerr << " (" << pfaffcy_last_error() << ")";
  std::cerr << "\n";
  return kExitError;
}

// Calls a buffer-protocol getter twice: once for the size, once for the text.
template <class F>
int fetch(F&& get, std::string& out) {
  size_t len = 0;
  int rc = get(nullptr, &len);
  if (rc != PFAFFCY_ERROR_INSUFFICIENT_BUFFER && rc != PFAFFCY_OK) return rc;
  std::vector<char> buf(len);
  rc = get(buf.data(), &len);
  if (rc == PFAFFCY_OK) out.assign(buf.data());
  return rc;
}

struct ConstructArgs {
  std::string family;
  uint32_t prime = 32003;
  uint64_t seed = 1;
  std::string level = "slice";
  bool force = false;
  bool no_timings = false;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  pfaffcy_run_t run = nullptr;
  int rc = pfaffcy_run_create(&run, a.family.c_str(), a.prime, a.seed, a.level.c_str(), a.force ? 1 : 0);
  if (rc != PFAFFCY_OK) return report_error(rc, "construct");
  std::string json;
  rc = fetch([&](char* b, size_t* l) { return pfaffcy_run_artifact_json(run, a.no_timings ? 0 : 1, b, l); }, json);
  if (rc != PFAFFCY_OK) {
    pfaffcy_run_destroy(run);
    return report_error(rc, "serialize");
  }
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    f << json << "\n";
    if (!f) {
      pfaffcy_run_destroy(run);
      std::cerr << "pfaffcy: cannot write " << a.out << "\n";
      return kExitError;
    }
  }
  int passed = 0, k = -1, h0 = -1, dim = -1;
  int64_t deg = 0, hr[4] = {0, 0, 0, 0};
  pfaffcy_run_passed(run, &passed);
  pfaffcy_run_numbers(run, &k, &h0, &dim, &deg);
  pfaffcy_run_hr(run, hr);
  std::string failure;
  fetch([&](char* b, size_t* l) { return pfaffcy_run_failure(run, b, l); }, failure);
  pfaffcy_run_destroy(run);

  std::printf("%s seed %llu: %s", a.family.c_str(), static_cast<unsigned long long>(a.seed), passed ? "pass" : "fail");
  if (k >= 0) std::printf(" k %d h0 %d", k, h0);
  if (dim >= 0) std::printf(" dim %d deg %lld hr (%lld,%lld,%lld,%lld)", dim, static_cast<long long>(deg), static_cast<long long>(hr[0]),
                            static_cast<long long>(hr[1]), static_cast<long long>(hr[2]), static_cast<long long>(hr[3]));
  if (!passed) std::printf(" reason: %s", failure.c_str());
  std::printf("\n");
  if (a.out.empty()) std::cout << json << "\n";
  return passed ? 0 : kExitFail;
}

int cmd_verify(const std::string& path, bool quiet) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "pfaffcy: cannot read " << path << "\n";
    return kExitError;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  int passed = 0;
  std::string report;
  int rc = fetch([&](char* b, size_t* l) { return pfaffcy_verify_json(text.c_str(), &passed, b, l); }, report);
  if (rc != PFAFFCY_OK) return report_error(rc, "verify");
  if (!quiet) std::cout << report << "\n";
  std::printf("%s: %s\n", path.c_str(), passed ? "pass" : "fail");
  return passed ? 0 : kExitFail;
}

int cmd_dims(const std::vector<int>& ks) {
  std::printf("%4s %8s %8s %8s %8s\n", "k", "dim_Mk", "tonoli", "hodge", "picard");
  for (int k : ks) {
    pfaffcy_dims_t d;
    int rc = pfaffcy_dims(k, &d);
    if (rc != PFAFFCY_OK) return report_error(rc, "dims");
    std::printf("%4d %8d %8lld %8lld ", d.k, d.dim_mk, static_cast<long long>(d.tonoli), static_cast<long long>(d.hodge));
    if (d.picard >= 0)
      std::printf("%8lld\n", static_cast<long long>(d.picard));
    else
      std::printf("%8s\n", "-");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian Calabi-Yau and del Pezzo constructions over prime fields"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: PFAFFCY_THREADS or 1)");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a family member and verify it");
  construct->add_option("--family", ca.family, "family tag (see 'families')")->required();
  construct->add_option("--prime", ca.prime, "field characteristic")->check(CLI::Range(5u, 2147483647u));
  construct->add_option("--seed", ca.seed, "random seed");
  construct->add_option("--verify", ca.level, "verification level")->check(CLI::IsMember({"fast", "slice", "full"}));
  construct->add_flag("--force", ca.force, "allow full verification on degree 17 families");
  construct->add_flag("--no-timings", ca.no_timings, "omit the timings block");
  construct->add_option("--out", ca.out, "artifact path (default: stdout)");

  std::string path;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "re-check a stored artifact from its ideal");
  verify->add_option("artifact", path, "artifact JSON")->required()->check(CLI::ExistingFile);
  verify->add_flag("-q,--quiet", quiet, "print only the verdict");

  std::vector<int> ks{8, 9, 11};
  auto* dims = app.add_subcommand("dims", "stratum, family and Hodge number bounds");
  dims->add_option("--k", ks, "strata (8, 9, 11)");

  auto* families = app.add_subcommand("families", "list family tags");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0 && pfaffcy_set_threads(threads) != PFAFFCY_OK) return report_error(PFAFFCY_ERROR_INVALID_ARGUMENT, "threads");

  if (*construct) return cmd_construct(ca);
  if (*verify) return cmd_verify(path, quiet);
  if (*dims) return cmd_dims(ks);
  if (*families) {
    size_t n = 0;
    pfaffcy_family_count(&n);
    for (size_t i = 0; i < n; ++i) std::printf("%s\n", pfaffcy_family_tag(i));
  }
  return 0;
}
