#include <json.hpp>

#include "pfaffcy/pipeline.hpp"

namespace pfaffcy {

using nlohmann::json;

namespace {

constexpr int kFormat = 1;

json poly_json(const Poly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (int v = 0; v < p.ring().nvars; ++v) exps.push_back(t.m[v]);
    terms.push_back(json::array({t.c, exps}));
  }
  return terms;
}

Poly poly_from(const Ring& ring, const json& j) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    const auto& exps = t.at(1);
    if (static_cast<int>(exps.size()) != ring.nvars) throw Error(Errc::io, "term has the wrong number of exponents");
    std::vector<int> e = exps.get<std::vector<int>>();
    const std::int64_t c = t.at(0).get<std::int64_t>();
    terms.push_back({Monomial::from_exponents(e), ring.field.from_int(c)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

json vars_json(int n) {
  json v = json::array();
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

json polys_block(const Ring& ring, const std::vector<Poly>& polys) {
  json ps = json::array();
  for (const auto& p : polys) ps.push_back(poly_json(p));
  return {{"format", kFormat}, {"prime", ring.prime()}, {"vars", vars_json(ring.nvars)}, {"polys", ps}};
}

std::vector<Poly> polys_from_block(const json& j) {
  if (j.value("format", kFormat) != kFormat) throw Error(Errc::io, "unsupported format version");
  const Coeff p = j.at("prime").get<Coeff>();
  if (p <= 3 || !is_prime(p)) throw Error(Errc::io, "prime field modulus is not an odd prime");
  Ring ring(PrimeField(p), static_cast<int>(j.at("vars").size()));
  std::vector<Poly> out;
  for (const auto& pj : j.at("polys")) out.push_back(poly_from(ring, pj));
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(std::vector<Coeff>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json hp_json(const HilbertPolynomial& hp) {
  return {{"proj_dim", hp.proj_dim},
          {"degree", hp.degree},
          {"q", hp.q},
          {"numerators", hp.numerators()},
          {"denominator", hp.denominator()},
          {"text", hp.to_string()}};
}

json probe_json(const ProbeReport& p) {
  return {{"mode", to_string(p.mode)},
          {"outcome", p.outcome_string()},
          {"samples", p.samples},
          {"singular_dim", p.singular_dim},
          {"detail", p.detail}};
}

json report_json(const Report& r, bool with_timings) {
  json j = {{"format", kFormat},
            {"family", r.family},
            {"prime", r.prime},
            {"seed", r.seed},
            {"k", opt(r.k)},
            {"bundle_label", r.bundle_label},
            {"section_dim", opt(r.section_dim)},
            {"ambient_vars", r.ambient_vars},
            {"proj_dim", r.proj_dim},
            {"degree", r.degree},
            {"slice_degree", r.slice_degree},
            {"formula_degree", opt(r.formula_degree)},
            {"canonical", opt(r.canonical)},
            {"hilbert_polynomial", hp_json(r.hp)},
            {"hr", r.hr},
            {"max_rank", r.max_rank},
            {"level", to_string(r.level)},
            {"probe", r.probe ? probe_json(*r.probe) : json(nullptr)},
            {"end_dim", opt(r.end_dim)},
            {"fixed_family_dim", opt(r.fixed_family_dim)},
            {"interpretation_dependent", r.interpretation_dependent},
            {"ideal_structure", r.ideal_structure},
            {"passed", r.passed},
            {"failure", r.failure}};
  if (r.dims)
    j["dims"] = {{"k", r.dims->k},
                 {"dim_mk", r.dims->dim_mk},
                 {"tonoli", r.dims->tonoli},
                 {"hodge", r.dims->hodge},
                 {"picard", opt(r.dims->picard)}};
  else
    j["dims"] = nullptr;
  if (with_timings) j["timings"] = r.timings;
  return j;
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Report report_from(const json& j) {
  Report r;
  r.family = j.at("family").get<std::string>();
  r.prime = j.at("prime").get<Coeff>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.k = opt_from<int>(j, "k");
  r.bundle_label = j.at("bundle_label").get<std::string>();
  r.section_dim = opt_from<int>(j, "section_dim");
  r.ambient_vars = j.at("ambient_vars").get<int>();
  r.proj_dim = j.at("proj_dim").get<int>();
  r.degree = j.at("degree").get<std::int64_t>();
  r.slice_degree = j.at("slice_degree").get<std::int64_t>();
  r.formula_degree = opt_from<std::int64_t>(j, "formula_degree");
  r.canonical = opt_from<std::int64_t>(j, "canonical");
  const json& hp = j.at("hilbert_polynomial");
  r.hp.proj_dim = hp.at("proj_dim").get<int>();
  r.hp.degree = hp.at("degree").get<std::int64_t>();
  r.hp.q = hp.at("q").get<std::vector<std::int64_t>>();
  r.hr = j.at("hr").get<std::vector<std::int64_t>>();
  r.max_rank = j.at("max_rank").get<bool>();
  r.level = verify_level_from_string(j.at("level").get<std::string>());
  if (!j.at("probe").is_null()) {
    const json& p = j.at("probe");
    ProbeReport pr;
    pr.mode = probe_mode_from_string(p.at("mode").get<std::string>());
    const std::string outcome = p.at("outcome").get<std::string>();
    pr.outcome = outcome == "smooth" ? ProbeReport::Outcome::smooth
                 : outcome == "singular" ? ProbeReport::Outcome::singular
                                         : ProbeReport::Outcome::inconclusive;
    pr.samples = p.at("samples").get<int>();
    pr.singular_dim = p.at("singular_dim").get<int>();
    pr.detail = p.at("detail").get<std::string>();
    r.probe = pr;
  }
  if (!j.at("dims").is_null()) {
    const json& d = j.at("dims");
    r.dims = DimsRow{d.at("k").get<int>(), d.at("dim_mk").get<int>(), d.at("tonoli").get<std::int64_t>(),
                     d.at("hodge").get<std::int64_t>(), opt_from<std::int64_t>(d, "picard")};
  }
  r.end_dim = opt_from<std::int64_t>(j, "end_dim");
  r.fixed_family_dim = opt_from<std::int64_t>(j, "fixed_family_dim");
  r.interpretation_dependent = j.at("interpretation_dependent").get<bool>();
  r.ideal_structure = j.at("ideal_structure").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.failure = j.at("failure").get<std::string>();
  if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
  return r;
}

json subspace_json(const TensorSubspace& s) {
  json gm = nullptr;
  if (!s.graph_map.empty()) gm = polys_block(s.graph_map.front().ring(), s.graph_map);
  return {{"side", s.side == Side::cy ? "cy" : "dp"},
          {"kind", to_string(s.kind)},
          {"seed", s.seed},
          {"attempts", s.attempts},
          {"basis", matrix_json(s.basis)},
          {"annihilator", matrix_json(s.annihilator)},
          {"graph_map", gm},
          {"interpretation_dependent", s.interpretation_dependent}};
}

json polymat_json(const PolyMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(poly_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"row_twists", m.row_twists()}, {"col_twists", m.col_twists()}, {"skew", m.skew()}, {"entries", rows}};
}

}  // namespace

std::string polys_to_json(const std::vector<Poly>& polys) {
  if (polys.empty()) throw Error(Errc::invalid_argument, "cannot serialize an empty list without a ring");
  return polys_block(polys.front().ring(), polys).dump();
}

std::vector<Poly> polys_from_json(const std::string& text) {
  try {
    return polys_from_block(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(Errc::io, std::string("malformed polynomial list: ") + e.what());
  }
}

std::string report_to_json(const Report& r, bool with_timings) { return report_json(r, with_timings).dump(2); }

std::string artifact_to_json(const Artifact& a, bool with_timings) {
  json j;
  j["format"] = kFormat;
  j["config"] = {{"family", a.config.family},
                 {"prime", a.config.prime},
                 {"seed", a.config.seed},
                 {"level", to_string(a.config.level)},
                 {"force", a.config.force}};
  j["subspace"] = a.subspace ? subspace_json(*a.subspace) : json(nullptr);
  j["fibers"] = a.fibers ? json{{"k", *a.fibers}, {"label", a.fiber_label}} : json(nullptr);
  if (a.spec)
    j["bundle"] = {{"vars", vars_json(a.spec->ring.nvars)}, {"twists", a.spec->twists}, {"constraint", polymat_json(a.spec->constraint)}};
  else
    j["bundle"] = nullptr;
  j["section"] = a.section ? json{{"coords", a.section->coords}, {"matrix", polymat_json(a.section->a)}} : json(nullptr);
  j["expected"] = {{"proj_dim", a.expected.proj_dim},
                   {"degree", a.expected.degree},
                   {"hr", a.expected.hr},
                   {"canonical", opt(a.expected.canonical)},
                   {"formula_degree", opt(a.expected.formula_degree)}};
  j["ideal"] = a.ideal ? polys_block(a.ideal->ring(), a.ideal->generators()) : json(nullptr);
  j["report"] = report_json(a.report, with_timings);
  return j.dump(2);
}

Report verify_artifact_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::io, std::string("malformed artifact: ") + e.what());
  }
  try {
    if (j.at("format").get<int>() != kFormat) throw Error(Errc::io, "unsupported artifact format");
    const json& cfg = j.at("config");
    const std::string family = cfg.at("family").get<std::string>();
    const FamilyInfo info = family_info(family);
    const VerifyLevel level = verify_level_from_string(cfg.at("level").get<std::string>());
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const Report stored = report_from(j.at("report"));
    const auto fail = [&](Report r, const std::string& why) {
      r.passed = false;
      r.failure = why;
      return r;
    };
    try {
      stored.check_consistency();
    } catch (const Error& e) {
      return fail(stored, e.what());
    }
    if (j.at("ideal").is_null()) return fail(stored, stored.failure.empty() ? "artifact has no ideal" : stored.failure);
    if (j.at("ideal").at("prime").get<Coeff>() != cfg.at("prime").get<Coeff>()) throw Error(Errc::io, "artifact prime mismatch");
    std::vector<Poly> gens = polys_from_block(j.at("ideal"));
    if (gens.empty()) return fail(stored, "artifact ideal has no generators");
    const Ring ring = gens.front().ring();
    Expectation e;
    e.proj_dim = info.proj_dim;
    e.degree = info.degree;
    const json& ex = j.at("expected");
    e.hr = ex.at("hr").get<std::vector<std::int64_t>>();
    e.canonical = opt_from<std::int64_t>(ex, "canonical");
    e.formula_degree = opt_from<std::int64_t>(ex, "formula_degree");
    Report r = verify_variety(Ideal(ring, std::move(gens)), e, level, probe_mode_for(info, level), seed);
    // construction-side data is carried over; everything else is recomputed
    r.family = stored.family;
    r.k = stored.k;
    r.bundle_label = stored.bundle_label;
    r.section_dim = stored.section_dim;
    r.dims = stored.dims;
    r.end_dim = stored.end_dim;
    r.fixed_family_dim = stored.fixed_family_dim;
    r.interpretation_dependent = stored.interpretation_dependent;
    if (!r.passed) return r;
    const json fresh = report_json(r, false);
    const json old = report_json(stored, false);
    for (const auto& [key, value] : fresh.items())
      if (old.at(key) != value) return fail(r, "report inconsistency: stored field '" + key + "' disagrees with the recomputation");
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::io, std::string("malformed artifact: ") + e.what());
  }
}

}  // namespace pfaffcy
