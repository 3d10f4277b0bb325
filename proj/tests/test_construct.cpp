#include "doctest.h"

#include "pfaffcy/construct.hpp"
#include "support.hpp"

using namespace pfaffcy;
using namespace testing;

namespace {

bool contains_rows(const TensorSubspace& s, const Matrix& rows) {
  for (int i = 0; i < rows.rows(); ++i)
    if (!s.contains(rows.row(i))) return false;
  return true;
}

// h0 of the skew cover sections: sum over i < j of h0(O(1 + d_i + d_j))
std::int64_t skew_count(int nvars, const std::vector<int>& d) {
  std::int64_t n = 0;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) n += monomial_count(nvars, 1 + d[i] + d[j]);
  return n;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("shapes and names") {
  CHECK(shape_of(Side::cy).p_dim == 7);
  CHECK(shape_of(Side::cy).sub_dim == 16);
  CHECK(shape_of(Side::cy).ann_dim() == 5);
  CHECK(shape_of(Side::dp).p_dim == 6);
  CHECK(shape_of(Side::dp).sub_dim == 14);
  CHECK(shape_of(Side::dp).ann_dim() == 4);
  for (auto k : {GraphKind::linear, GraphKind::veronese2, GraphKind::cubic_basepoint, GraphKind::m10, GraphKind::restricted})
    CHECK(graph_kind_from_string(to_string(k)) == k);
  for (auto b : {BundleType::tangent_twist, BundleType::o2_o3, BundleType::o1_o4}) CHECK(bundle_type_from_string(to_string(b)) == b);
  CHECK_THROWS(graph_kind_from_string("nonsense"));
  for (auto row : {TableRow::dp3, TableRow::dp7, TableRow::cy12, TableRow::cy16}) CHECK(table_row_from_string(to_string(row)) == row);
  CHECK_FALSE(table_row_from_string("cy17").has_value());
  CHECK(table_row_degree(TableRow::dp3) == 3);
  CHECK(table_row_degree(TableRow::dp7) == 7);
  CHECK(table_row_degree(TableRow::cy12) == 12);
  CHECK(table_row_degree(TableRow::cy16) == 16);
}

TEST_CASE("graph spans") {
  Ring w(PrimeField(32003), 3);
  std::vector<Poly> lin;
  for (int i = 0; i < 7; ++i) lin.push_back(i < 3 ? Poly::variable(w, i) : Poly(w));
  CHECK(graph_span(lin, 7).rows() == 6);
  Rng rng(4);
  std::vector<Poly> quad;
  for (int i = 0; i < 7; ++i) quad.push_back(random_form(w, 2, rng));
  CHECK(graph_span(quad, 7).rows() == 10);
}

TEST_CASE("graph subspaces on the CY side") {
  struct Case {
    GraphKind kind;
    int span;
    int k;
  };
  for (Case c : {Case{GraphKind::linear, 6, 11}, Case{GraphKind::veronese2, 10, 9}, Case{GraphKind::cubic_basepoint, 14, 8}}) {
    CAPTURE(to_string(c.kind));
    TensorSubspace s = build_graph_subspace(c.kind, 3);
    s.check();
    CHECK(s.side == Side::cy);
    CHECK(s.basis.rows() == 16);
    CHECK(s.annihilator.rows() == 5);
    CHECK(s.graph_span.rows() == c.span);
    CHECK(contains_rows(s, s.graph_span));
    CHECK(expected_fiber_count(c.kind) == c.k);

    TensorSubspace again = build_graph_subspace(c.kind, 3);
    CHECK(again.basis == s.basis);

    PolyMat lam = lambda_on_p2(s);
    CHECK(lam.rows() == 7);
    CHECK(lam.cols() == 5);
    CHECK(annihilator_from_lambda(lam) == s.annihilator);
    FiberCount fc = fiber_count(lam, Side::cy);
    CHECK(fc.k == c.k);

    PolyMat psi = matrix_on_pn(s);
    CHECK(psi.rows() == 3);
    CHECK(psi.cols() == 16);
  }
}

TEST_CASE("dP side and the side changes") {
  TensorSubspace s = build_graph_subspace(GraphKind::dp_linear, 5);
  CHECK(s.side == Side::dp);
  CHECK(s.basis.rows() == 14);
  CHECK(fiber_count(lambda_on_p2(s), Side::dp).k == 7);
  TensorSubspace t = build_graph_subspace(GraphKind::dp_veronese2, 5);
  CHECK(fiber_count(lambda_on_p2(t), Side::dp).k == 6);

  TensorSubspace up = extend_dp_to_cy(s, 7);
  CHECK(up.side == Side::cy);
  CHECK(up.basis.rows() == 16);
  CHECK(contains_rows(up, up.graph_span));
  CHECK(fiber_count(lambda_on_p2(up), Side::cy).k == 11);

  TensorSubspace down = cy_to_dp(build_graph_subspace(GraphKind::veronese2, 2), 9);
  CHECK(down.side == Side::dp);
  CHECK(fiber_count(lambda_on_p2(down), Side::dp).k == 6);
}

TEST_CASE("subspace from span and annihilator agree") {
  TensorSubspace s = build_generic_subspace(Side::cy, 6);
  TensorSubspace a = subspace_from_annihilator(Side::cy, s.annihilator, GraphKind::generic, 6);
  CHECK(a.basis == s.basis);
  TensorSubspace b = subspace_from_span(Side::cy, s.basis, GraphKind::generic, 6);
  CHECK(b.annihilator == s.annihilator);
}

TEST_CASE("section spaces of split bundles") {
  Ring p5(PrimeField(32003), 6);
  for (const auto& d : {std::vector<int>{0, 0, 0, 0, 0}, std::vector<int>{-1, 1, 1}}) {
    SectionSpace sp(BundleKernelSpec::direct_sum(p5, d));
    CHECK(sp.dim() == skew_count(6, d));
    CHECK(sp.equations() == 0);
  }
}

TEST_CASE("section spaces of the table rows") {
  // (kernel rows, section dim) for Omega-type and generic kernels
  BundleKernelSpec dp6 = table_row_spec(TableRow::dp6, 1);
  CHECK(dp6.constraint_rows() == 1);
  CHECK(dp6.rank() == 7);
  SectionSpace sp(dp6);
  CHECK(sp.dim() > 0);
  SkewSection a = random_section(sp, 1);
  a.a.check();
  CHECK(a.coords.size() == static_cast<size_t>(sp.dim()));
  // a section is annihilated by the constraint
  PolyMat prod = dp6.constraint * a.a;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j).is_zero());
  CHECK(random_section(sp, 1).coords == a.coords);
}

TEST_CASE("pfaffian loci") {
  BundleKernelSpec spec = table_row_spec(TableRow::dp5, 1);
  SectionSpace sp(spec);
  PfaffianLocus loc = pfaffian_locus(random_section(sp, 2), spec, 2);
  CHECK(loc.r == 2);
  CHECK(loc.generic_rank == 4);
  CHECK(loc.pfaffians == 5);
  CHECK(loc.hp.proj_dim == 2);
  CHECK(loc.hp.degree == 5);
  CHECK(loc.ideal.saturated());

  std::vector<Coeff> zero(sp.dim(), 0);
  try {
    pfaffian_locus(sp.element(zero), spec, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::wrong_generic_rank);
  }
}

TEST_CASE("special builders") {
  TensorSubspace m10 = special_builder(GraphKind::m10, 1);
  m10.check();
  CHECK(fiber_count(lambda_on_p2(m10), Side::cy).k == 10);
  TensorSubspace skew = special_builder(GraphKind::skew_k9, 1);
  CHECK(skew.interpretation_dependent);
  CHECK(fiber_count(lambda_on_p2(skew), Side::cy).k == 9);
  TensorSubspace proj = build_by_projection(BundleType::o2_o3, 1);
  proj.check();
  CHECK(proj.kind == GraphKind::projection);
}

}  // TEST_SUITE
