#include "pfaffcy/invariants.hpp"

#include <array>
#include <chrono>

namespace pfaffcy {

namespace {

using Series = std::array<std::int64_t, 4>;  // coefficients of 1, h, h^2, h^3

Series times(const Series& a, const Series& b) {
  Series out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

ChernData chern_classes(const BundleKernelSpec& spec) {
  Series c{1, 0, 0, 0};
  for (int d : spec.twists) c = times(c, Series{1, d, 0, 0});
  // (1 + h)^(-1) = 1 - h + h^2 - h^3
  const Series inv{1, -1, 1, -1};
  for (int i = 0; i < spec.constraint_rows(); ++i) c = times(c, inv);
  return {c[1], c[2], c[3]};
}

BundleSpec BundleSpec::make(int n, int r, std::int64_t c1, std::int64_t c2, std::int64_t c3) {
  BundleSpec b;
  b.n = n;
  b.r = r;
  b.rank = 2 * r + 1;
  b.c1 = c1;
  b.c2 = c2;
  b.c3 = c3;
  b.s = c1 + r * b.t;
  b.check();
  return b;
}

BundleSpec BundleSpec::from_kernel(const BundleKernelSpec& spec) {
  ChernData c = chern_classes(spec);
  return make(spec.ring.nvars - 1, spec.r(), c.c1, c.c2, c.c3);
}

void BundleSpec::check() const {
  if (rank != 2 * r + 1 || r < 0) throw Error(Errc::invalid_argument, "bundle rank must be 2r + 1");
  if (s != c1 + r * t) throw Error(Errc::invalid_argument, "bundle twist s must equal c1 + r t");
}

std::int64_t pfaffian_degree(const BundleSpec& b) {
  if (b.t != 1) throw Error(Errc::unsupported, "degree formula needs t = 1");
  const std::int64_t r = b.r;
  const std::int64_t top = r * (2 * r + 1) * (2 * r + 2);
  if (top % 12) throw Error(Errc::invalid_argument, "degree formula is not integral for this spec");
  return r * b.c1 * b.c1 + b.c1 * b.c2 + (r * r + r) * b.c1 + b.c2 - b.c3 + top / 12;
}

std::int64_t canonical_degree_check(const BundleSpec& b) { return b.t + 2 * b.s - b.n - 1; }

std::int64_t fixed_family_dimension(std::int64_t h0, std::int64_t end_dim) { return h0 - end_dim; }

int stratum_dimension(int k) {
  // the graph of v : P^2 -> P^6 of degree e spans the forms of degree e + 1
  // (minus the basepoint condition); v itself is 7 forms up to scalar
  int forms, span;
  switch (k) {
    case 11: forms = static_cast<int>(monomial_count(3, 1)), span = static_cast<int>(monomial_count(3, 2)); break;
    case 9: forms = static_cast<int>(monomial_count(3, 2)), span = static_cast<int>(monomial_count(3, 3)); break;
    case 8: forms = static_cast<int>(monomial_count(3, 3)) - 1, span = static_cast<int>(monomial_count(3, 4)) - 1; break;
    default: throw Error(Errc::unsupported, "no stratum dimension for k = " + std::to_string(k));
  }
  const int p = 7, sub = 16, ambient = 3 * p;
  return (p * forms - 1) + (sub - span) * (ambient - sub);
}

std::int64_t tonoli_family_dimension(const FamilySpec& f) {
  const std::int64_t dim_b = f.dim_mk + static_cast<std::int64_t>(f.p) * f.p;
  return dim_b + f.k - static_cast<std::int64_t>(f.p) * f.p - static_cast<std::int64_t>(f.q) * f.q;
}

std::int64_t hodge_bound(const FamilySpec& f) { return f.dim_mk - 57 + f.k; }

std::int64_t picard_bound(int degree, std::int64_t h12_bound) {
  if (degree != 17) throw Error(Errc::unsupported, "Picard bound is only derived for degree 17");
  return h12_bound - 22;
}

DimsRow dims_row(int k) {
  FamilySpec f;
  f.k = k;
  f.dim_mk = stratum_dimension(k);
  DimsRow row{k, f.dim_mk, tonoli_family_dimension(f), hodge_bound(f), std::nullopt};
  const std::int64_t pic = picard_bound(17, row.hodge);
  if (pic >= 2) row.picard = pic;
  return row;
}

std::string to_string(VerifyLevel v) {
  switch (v) {
    case VerifyLevel::fast: return "fast";
    case VerifyLevel::slice: return "slice";
    case VerifyLevel::full: return "full";
  }
  return "?";
}

VerifyLevel verify_level_from_string(const std::string& s) {
  if (s == "fast") return VerifyLevel::fast;
  if (s == "slice") return VerifyLevel::slice;
  if (s == "full") return VerifyLevel::full;
  throw Error(Errc::invalid_argument, "unknown verify level '" + s + "'");
}

void Report::check_consistency() const {
  auto bad = [](const std::string& what) { throw Error(Errc::report_inconsistency, "report inconsistency: " + what); };
  if (hp.proj_dim != proj_dim) bad("proj_dim differs from the Hilbert polynomial");
  if (hp.degree != degree) bad("degree differs from the Hilbert polynomial");
  if (hr.size() != 4) bad("hr values must cover j = 1..4");
  if (passed) {
    if (!failure.empty()) bad("passing report carries a failure");
    if (ambient_vars - 1 - proj_dim != 3) bad("passing report without codimension 3");
    if (slice_degree != degree) bad("degree differs from the sliced length");
    if (formula_degree && *formula_degree != degree) bad("degree differs from the Chern formula");
    if (probe && !probe->passed()) bad("passing report with a failed smoothness probe");
  } else if (failure.empty()) {
    bad("failing report without a reason");
  }
}

Report verify_variety(const Ideal& i, const Expectation& e, VerifyLevel level, ProbeMode probe, std::uint64_t seed) {
  using clk = std::chrono::steady_clock;
  Report rep;
  rep.level = level;
  rep.ambient_vars = i.ring().nvars;
  rep.prime = i.ring().prime();
  rep.seed = seed;
  auto fail = [&](const std::string& why) {
    if (rep.failure.empty()) rep.failure = why;
  };
  auto t0 = clk::now();
  Ideal sat = i.saturated() ? i : saturate_irrelevant(i, seed);
  rep.hp = sat.hilbert_polynomial();
  rep.proj_dim = rep.hp.proj_dim;
  rep.degree = rep.hp.degree;
  rep.timings["hilbert"] = std::chrono::duration<double>(clk::now() - t0).count();
  rep.formula_degree = e.formula_degree;
  rep.canonical = e.canonical;

  if (rep.ambient_vars - 1 - rep.proj_dim != 3) fail("codimension " + std::to_string(rep.ambient_vars - 1 - rep.proj_dim) + " instead of 3");
  if (rep.proj_dim != e.proj_dim) fail("dimension " + std::to_string(rep.proj_dim) + " instead of " + std::to_string(e.proj_dim));
  if (rep.degree != e.degree) fail("degree " + std::to_string(rep.degree) + " instead of " + std::to_string(e.degree));
  if (e.formula_degree && *e.formula_degree != rep.degree) fail("Chern formula degree " + std::to_string(*e.formula_degree) + " disagrees");
  if (e.canonical) {
    const std::int64_t want = e.proj_dim == 3 ? 0 : -1;
    if (*e.canonical != want) fail("canonical twist " + std::to_string(*e.canonical) + " instead of " + std::to_string(want));
  }

  t0 = clk::now();
  if (rep.proj_dim >= 0) {
    Rng rng(seed ^ 0x511CEu);
    SliceCertificate cert = certify_by_slicing(sat, rep.proj_dim, rng);
    rep.slice_degree = cert.degree;
    if (!cert.dimension_confirmed) fail("slicing did not confirm the dimension");
    if (cert.degree != rep.degree) fail("sliced length " + std::to_string(cert.degree) + " differs from the degree");
  }
  rep.timings["slice"] = std::chrono::duration<double>(clk::now() - t0).count();

  t0 = clk::now();
  if (rep.proj_dim >= 1) {
    try {
      rep.hr = hr_function(sat, rep.hp, 1, 4);
    } catch (const Error& err) {
      fail(err.what());
    }
    rep.max_rank = maximal_rank_check(sat, rep.hp, 1, 4);
  }
  if (rep.hr.size() == 4) {
    if (rep.hr.back() != 0) fail("Hartshorne-Rao module does not vanish in degree 4");
    for (std::size_t j = 0; j < e.hr.size() && j < rep.hr.size(); ++j)
      if (e.hr[j] != rep.hr[j])
        fail("h^1(I(" + std::to_string(j + 1) + ")) = " + std::to_string(rep.hr[j]) + " instead of " + std::to_string(e.hr[j]));
  } else {
    rep.hr.assign(4, 0);
  }
  rep.timings["hr"] = std::chrono::duration<double>(clk::now() - t0).count();

  if (level != VerifyLevel::fast && rep.failure.empty()) {
    t0 = clk::now();
    ProbeOptions opt;
    opt.seed = seed;
    rep.probe = singular_probe(sat, 3, probe, opt);
    if (!rep.probe->passed()) fail("smoothness " + rep.probe->outcome_string() + ": " + rep.probe->detail);
    rep.timings["probe"] = std::chrono::duration<double>(clk::now() - t0).count();
  }
  rep.passed = rep.failure.empty();
  return rep;
}

}  // namespace pfaffcy
