#include "doctest.h"

#include "pfaffcy/groebner.hpp"
#include "support.hpp"

using namespace pfaffcy;
using namespace testing;

namespace {

std::vector<Poly> parse_all(const Ring& r, std::initializer_list<const char*> text) {
  std::vector<Poly> out;
  for (const char* t : text) out.push_back(Poly::parse(r, t));
  return out;
}

Ideal twisted_cubic(const Ring& r) { return Ideal(r, parse_all(r, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"})); }

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("twisted cubic") {
  Ring r(PrimeField(32003), 4);
  Ideal i = twisted_cubic(r);
  auto hp = i.hilbert_polynomial();
  CHECK(hp.proj_dim == 1);
  CHECK(hp.degree == 3);
  for (int d = 0; d <= 8; ++d) {
    CHECK(i.hilbert_function(d) == 3 * d + 1);
    CHECK(hilbert_function_macaulay(i, d) == 3 * d + 1);
    CHECK(hp(d) == 3 * d + 1);
  }
  CHECK(i.contains(Poly::parse(r, "x0*x2^2 - x1^2*x2")));
  CHECK_FALSE(i.contains(Poly::parse(r, "x0*x1")));
}

TEST_CASE("reduced basis shape") {
  Ring r(PrimeField(32003), 4);
  Ideal tc = twisted_cubic(r);
  const auto& g = tc.groebner();
  for (size_t a = 0; a < g.elements.size(); ++a) {
    CHECK(g.elements[a].leading_coeff() == 1);
    for (size_t b = 0; b < g.elements.size(); ++b)
      if (a != b) CHECK_FALSE(g.elements[b].leading_monomial().divides(g.elements[a].leading_monomial()));
    CHECK(normal_form(g.elements[a], g).is_zero());
  }
}

TEST_CASE("unit and irrelevant ideals") {
  Ring r(PrimeField(32003), 3);
  Ideal u = Ideal::unit(r);
  CHECK(u.groebner().is_unit());
  CHECK(u.empty_scheme());
  CHECK(u.hilbert_function(0) == 0);
  Ideal m = Ideal::irrelevant(r);
  CHECK(m.empty_scheme());
  CHECK(m.hilbert_function(0) == 1);
  CHECK(m.hilbert_function(1) == 0);
  Ideal zero(r, {});
  CHECK(zero.hilbert_polynomial().proj_dim == 2);
  CHECK(zero.hilbert_function(3) == 10);
}

TEST_CASE("hilbert series of a complete intersection") {
  Ring r(PrimeField(32003), 4);
  Rng rng(12);
  // (2, 3) complete intersection curve: degree 6, genus 4, hp = 6d - 3
  Ideal ci(r, {random_form(r, 2, rng), random_form(r, 3, rng)});
  auto hp = ci.hilbert_polynomial();
  CHECK(hp.proj_dim == 1);
  CHECK(hp.degree == 6);
  CHECK(hp(10) == 57);
  CHECK(hp.to_string().find("6") != std::string::npos);
  for (int d = 0; d <= 6; ++d) CHECK(ci.hilbert_function(d) == oracle_hilbert(r, ci.generators(), d));
}

TEST_CASE("elliptic normal quintic") {
  Ring r(PrimeField(32003), 5);
  Rng rng(8);
  Ideal e(r, principal_pfaffians(random_skew(r, std::vector<int>(5, 0), rng), 4));
  CHECK(e.generators().size() == 5);
  auto hp = e.hilbert_polynomial();
  CHECK(hp.proj_dim == 1);
  CHECK(hp.degree == 5);
  for (int d = 1; d <= 5; ++d) CHECK(e.hilbert_function(d) == 5 * d);
  CHECK(e.hilbert_function(0) == 1);
}

TEST_CASE("ideal quotient and saturation") {
  Ring r(PrimeField(32003), 3);
  // x * (x, y) has an embedded point at (0:0:1) which saturation keeps
  Ideal emb(r, parse_all(r, {"x0^2", "x0*x1"}));
  CHECK(ideal_quotient(emb, Poly::variable(r, 0)).same_as(Ideal(r, parse_all(r, {"x0", "x1"}))));
  CHECK(saturate_irrelevant(emb, 3).same_as(emb));
  // x * (x, y, z) only differs from (x) in low degree
  Ideal i(r, parse_all(r, {"x0^2", "x0*x1", "x0*x2"}));
  Ideal s = saturate_irrelevant(i, 3);
  CHECK(s.same_as(Ideal(r, parse_all(r, {"x0"}))));
  CHECK(s.saturated());
  CHECK(s.hilbert_polynomial().proj_dim == 1);
  CHECK(s.hilbert_polynomial().degree == 1);

  // the irrelevant ideal saturates to the unit ideal
  CHECK(saturate_irrelevant(Ideal::irrelevant(r), 1).groebner().is_unit());

  Ring r4(PrimeField(32003), 4);
  Ideal tc = twisted_cubic(r4);
  Ideal cubes(r4, parse_all(r4, {"x0^3", "x1^3", "x2^3", "x3^3"}));
  std::vector<Poly> prod;
  for (const auto& a : tc.generators())
    for (const auto& b : cubes.generators()) prod.push_back(a * b);
  CHECK(saturate_irrelevant(Ideal(r4, prod), 5).same_as(tc));
}

TEST_CASE("saturate_last_variable") {
  Ring r(PrimeField(32003), 3);
  Ideal i(r, parse_all(r, {"x0*x2", "x1*x2^2"}));
  Ideal s(r, saturate_last_variable(i));
  CHECK(s.same_as(Ideal(r, parse_all(r, {"x0", "x1"}))));
}

TEST_CASE("linear_reduce") {
  Ring r(PrimeField(32003), 3);
  auto polys = parse_all(r, {"x0^2 + x1^2", "2*x0^2 + 2*x1^2", "x0^2 - x1^2", "x0", "x2"});
  auto red = linear_reduce(polys);
  CHECK(red.size() == 4);
  CHECK(Ideal(r, red).same_as(Ideal(r, polys)));
}

TEST_CASE("random slice and slicing certificate") {
  Ring r(PrimeField(32003), 4);
  Ideal tc = twisted_cubic(r);
  Rng rng(21);
  Matrix param;
  Ideal cut = random_slice(tc, 1, rng, &param);
  CHECK(cut.ring().nvars == 3);
  CHECK(param.rows() == 4);
  CHECK(param.cols() == 3);
  CHECK(cut.hilbert_polynomial().proj_dim == 0);
  CHECK(cut.hilbert_polynomial().degree == 3);
  auto cert = certify_by_slicing(tc, 1, rng);
  CHECK(cert.proj_dim == 1);
  CHECK(cert.degree == 3);
  CHECK(cert.dimension_confirmed);
}

TEST_CASE("rational points") {
  Ring r(PrimeField(32003), 3);
  // three points on a line in generic position to the last coordinate
  Ideal pts(r, parse_all(r, {"x0 - x2", "x1*(x1 - x2)*(x1 - 2*x2)"}));
  auto p = rational_points(pts);
  CHECK(p.size() == 3);
  for (const auto& x : p)
    for (const auto& g : pts.generators()) CHECK(g.evaluate(x) == 0);
}

TEST_CASE("singular probe") {
  Ring r(PrimeField(32003), 3);
  Ideal conic(r, parse_all(r, {"x0*x1 - x2^2"}));
  CHECK(singular_probe(conic, 1, ProbeMode::full).passed());
  CHECK(singular_probe(conic, 1, ProbeMode::slice, {5, 40, 1}).passed());
  Ideal nodal(r, parse_all(r, {"x1^2*x2 - x0^3 - x0^2*x2"}));
  auto rep = singular_probe(nodal, 1, ProbeMode::full);
  CHECK(rep.outcome == ProbeReport::Outcome::singular);
  CHECK(rep.singular_dim == 0);

  Ring r4(PrimeField(32003), 4);
  Ideal cone(r4, parse_all(r4, {"x0*x1 - x2^2"}));
  CHECK_FALSE(singular_probe(cone, 1, ProbeMode::full).passed());
  CHECK(probe_mode_from_string(to_string(ProbeMode::points)) == ProbeMode::points);
}

}  // TEST_SUITE
