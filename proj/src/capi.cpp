#include "pfaffcy.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "pfaffcy/parallel.hpp"
#include "pfaffcy/pipeline.hpp"

struct pfaffcy_run_struct {
  pfaffcy::Artifact artifact;
};

namespace {

thread_local std::string g_last_error;

int status_of(pfaffcy::Errc c) {
  using pfaffcy::Errc;
  switch (c) {
    case Errc::invalid_argument:
    case Errc::ring_mismatch:
    case Errc::odd_support: return PFAFFCY_ERROR_INVALID_ARGUMENT;
    case Errc::io: return PFAFFCY_ERROR_IO;
    case Errc::unsupported: return PFAFFCY_ERROR_UNSUPPORTED;
    default: return PFAFFCY_ERROR_COMPUTATION;
  }
}

template <class F>
int guard(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const pfaffcy::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PFAFFCY_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PFAFFCY_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return PFAFFCY_ERROR_INTERNAL;
  }
}

int write_string(const std::string& s, char* out, size_t* len) {
  if (!len) return PFAFFCY_ERROR_NULL_POINTER;
  const size_t need = s.size() + 1;
  const size_t have = *len;
  *len = need;
  if (!out || have < need) return PFAFFCY_ERROR_INSUFFICIENT_BUFFER;
  std::memcpy(out, s.c_str(), need);
  return PFAFFCY_OK;
}

const std::vector<std::string>& tags() {
  static const std::vector<std::string> t = pfaffcy::family_tags();
  return t;
}

}  // namespace

extern "C" {

const char* pfaffcy_error_description(int code) {
  switch (code) {
    case PFAFFCY_OK: return "OK";
    case PFAFFCY_ERROR_INVALID_ARGUMENT: return "Invalid argument";
    case PFAFFCY_ERROR_NULL_POINTER: return "Null pointer argument";
    case PFAFFCY_ERROR_INSUFFICIENT_BUFFER: return "Insufficient buffer space";
    case PFAFFCY_ERROR_IO: return "Malformed input";
    case PFAFFCY_ERROR_UNSUPPORTED: return "Unsupported operation";
    case PFAFFCY_ERROR_COMPUTATION: return "Computation failed";
    case PFAFFCY_ERROR_INTERNAL: return "Internal error";
  }
  return "Unknown error";
}

const char* pfaffcy_last_error(void) { return g_last_error.c_str(); }

const char* pfaffcy_version_string(void) { return "pfaffcy 1.0.0"; }

int pfaffcy_set_threads(int n) {
  return guard([&]() -> int {
    if (n < 1) throw pfaffcy::Error(pfaffcy::Errc::invalid_argument, "thread count must be positive");
    pfaffcy::set_thread_count(n);
    return PFAFFCY_OK;
  });
}

int pfaffcy_family_count(size_t* count) {
  if (!count) return PFAFFCY_ERROR_NULL_POINTER;
  *count = tags().size();
  return PFAFFCY_OK;
}

const char* pfaffcy_family_tag(size_t i) { return i < tags().size() ? tags()[i].c_str() : nullptr; }

int pfaffcy_run_create(pfaffcy_run_t* run, const char* family, uint32_t prime, uint64_t seed, const char* level, int force) {
  if (!run || !family || !level) return PFAFFCY_ERROR_NULL_POINTER;
  *run = nullptr;
  return guard([&]() -> int {
    pfaffcy::RunConfig cfg;
    cfg.family = family;
    cfg.prime = prime;
    cfg.seed = seed;
    cfg.level = pfaffcy::verify_level_from_string(level);
    cfg.force = force != 0;
    *run = new pfaffcy_run_struct{pfaffcy::run_family(cfg)};
    return PFAFFCY_OK;
  });
}

int pfaffcy_run_destroy(pfaffcy_run_t run) {
  delete run;
  return PFAFFCY_OK;
}

int pfaffcy_run_passed(pfaffcy_run_t run, int* passed) {
  if (!run || !passed) return PFAFFCY_ERROR_NULL_POINTER;
  *passed = run->artifact.report.passed ? 1 : 0;
  return PFAFFCY_OK;
}

int pfaffcy_run_numbers(pfaffcy_run_t run, int* k, int* section_dim, int* proj_dim, int64_t* degree) {
  if (!run) return PFAFFCY_ERROR_NULL_POINTER;
  const pfaffcy::Report& r = run->artifact.report;
  if (k) *k = r.k.value_or(-1);
  if (section_dim) *section_dim = r.section_dim.value_or(-1);
  if (proj_dim) *proj_dim = r.proj_dim;
  if (degree) *degree = r.degree;
  return PFAFFCY_OK;
}

int pfaffcy_run_hr(pfaffcy_run_t run, int64_t hr[4]) {
  if (!run || !hr) return PFAFFCY_ERROR_NULL_POINTER;
  for (int j = 0; j < 4; ++j) hr[j] = run->artifact.report.hr.at(j);
  return PFAFFCY_OK;
}

int pfaffcy_run_failure(pfaffcy_run_t run, char* out, size_t* len) {
  if (!run) return PFAFFCY_ERROR_NULL_POINTER;
  return write_string(run->artifact.report.failure, out, len);
}

int pfaffcy_run_artifact_json(pfaffcy_run_t run, int with_timings, char* out, size_t* len) {
  if (!run) return PFAFFCY_ERROR_NULL_POINTER;
  return guard([&]() -> int { return write_string(pfaffcy::artifact_to_json(run->artifact, with_timings != 0), out, len); });
}

int pfaffcy_run_report_json(pfaffcy_run_t run, int with_timings, char* out, size_t* len) {
  if (!run) return PFAFFCY_ERROR_NULL_POINTER;
  return guard([&]() -> int { return write_string(pfaffcy::report_to_json(run->artifact.report, with_timings != 0), out, len); });
}

int pfaffcy_verify_json(const char* artifact, int* passed, char* report, size_t* len) {
  if (!artifact || !passed) return PFAFFCY_ERROR_NULL_POINTER;
  return guard([&]() -> int {
    pfaffcy::Report r = pfaffcy::verify_artifact_json(artifact);
    *passed = r.passed ? 1 : 0;
    if (!len) return static_cast<int>(PFAFFCY_OK);
    return write_string(pfaffcy::report_to_json(r, false), report, len);
  });
}

int pfaffcy_dims(int k, pfaffcy_dims_t* out) {
  if (!out) return PFAFFCY_ERROR_NULL_POINTER;
  return guard([&]() -> int {
    pfaffcy::DimsRow row = pfaffcy::dims_row(k);
    *out = {row.k, row.dim_mk, row.tonoli, row.hodge, row.picard.value_or(-1)};
    return PFAFFCY_OK;
  });
}
}
