// Randomised properties. Every case derives its inputs from a case seed, so
// a failure names the seed that reproduces it.
#include "doctest.h"

#include <algorithm>

#include "pfaffcy/construct.hpp"
#include "pfaffcy/invariants.hpp"
#include "pfaffcy/modgeom.hpp"
#include "pfaffcy/pipeline.hpp"
#include "support.hpp"

using namespace pfaffcy;
using namespace testing;

namespace {

constexpr int kCases = 25;

template <class F>
void for_cases(int count, std::uint64_t salt, F&& body) {
  for (int c = 0; c < count; ++c) {
    const std::uint64_t seed = salt * 1000 + c;
    CAPTURE(seed);
    Rng rng(seed);
    body(rng);
  }
}

Ring random_ring(Rng& rng, int lo, int hi) { return Ring(PrimeField(32003), lo + static_cast<int>(rng.below(hi - lo + 1))); }

std::vector<Poly> random_gens(const Ring& r, Rng& rng, int count, int max_deg) {
  std::vector<Poly> g;
  for (int i = 0; i < count; ++i) g.push_back(random_form(r, 1 + static_cast<int>(rng.below(max_deg)), rng));
  return g;
}

// sparse forms produce non-generic Hilbert functions
Poly sparse_form(const Ring& r, int d, Rng& rng, int terms) {
  auto monos = monomials_of_degree(r, d);
  Poly p(r);
  for (int t = 0; t < terms; ++t) p += Poly::monomial(r, monos[rng.below(monos.size())], rng.nonzero(r.field));
  return p;
}

std::vector<Poly> sparse_gens(const Ring& r, Rng& rng, int count, int max_deg) {
  std::vector<Poly> g;
  for (int i = 0; i < count; ++i) {
    Poly p = sparse_form(r, 1 + static_cast<int>(rng.below(max_deg)), rng, 1 + static_cast<int>(rng.below(3)));
    if (!p.is_zero()) g.push_back(p);
  }
  return g;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("pfaffian squared is the determinant") {
  for_cases(kCases, 1, [](Rng& rng) {
    Ring r(PrimeField(32003), 3);
    const int n = 2 + static_cast<int>(rng.below(7));
    PolyMat a = random_skew(r, std::vector<int>(n, 0), rng);
    Poly det = determinant(a);
    if (n % 2) {
      CHECK(det.is_zero());
    } else {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      Poly pf = pfaffian(a, all);
      CHECK(pf * pf == det);
    }
  });
}

TEST_CASE("pfaffian of a congruent matrix") {
  for_cases(kCases, 2, [](Rng& rng) {
    Ring r(PrimeField(32003), 3);
    const int n = 2 * (1 + static_cast<int>(rng.below(3)));
    PolyMat a = random_skew(r, std::vector<int>(n, 0), rng);
    Matrix b = random_matrix(r.field, n, n, rng);
    PolyMat c(r, a.row_twists(), a.col_twists(), true);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly e(r);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            if (k != l) e += a.at(k, l).scaled(r.field.mul(b(k, i), b(l, j)));
        c.set(i, j, e);
      }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    CHECK(pfaffian(c, all) == pfaffian(a, all).scaled(determinant(b)));
  });
}

TEST_CASE("pfaffians evaluate pointwise") {
  for_cases(kCases, 3, [](Rng& rng) {
    Ring r(PrimeField(32003), 4);
    const int n = 3 + static_cast<int>(rng.below(4));
    PolyMat a = random_skew(r, std::vector<int>(n, 0), rng);
    auto x = random_point(r.field, 4, rng);
    Matrix ax = a.evaluate(x);
    // rank of a skew matrix is even and at most n
    int rk = rank(ax);
    CHECK(rk % 2 == 0);
    auto pf = principal_pfaffians(a, rk + 2 <= n ? rk + 2 : rk);
    if (rk + 2 <= n)
      for (const auto& p : pf) CHECK(p.evaluate(x) == 0);
  });
}

TEST_CASE("groebner bases are canonical") {
  for_cases(kCases, 4, [](Rng& rng) {
    Ring r = random_ring(rng, 3, 5);
    auto gens = rng.below(2) ? random_gens(r, rng, 2 + static_cast<int>(rng.below(3)), 3) : sparse_gens(r, rng, 4, 3);
    Ideal i(r, gens);
    const auto& g = i.groebner();

    auto perm = gens;
    std::reverse(perm.begin(), perm.end());
    if (!perm.empty()) perm.push_back(perm.front().scaled(2));
    for (auto& p : perm) p = p.scaled(rng.nonzero(r.field));
    CHECK(Ideal(r, perm).groebner().elements == g.elements);

    // idempotent
    CHECK(Ideal(r, g.elements).groebner().elements == g.elements);
    for (const auto& p : gens) CHECK(normal_form(p, g).is_zero());
    for (const auto& e : g.elements) CHECK(e.leading_coeff() == 1);
  });
}

TEST_CASE("normal forms respect the ideal") {
  for_cases(kCases, 5, [](Rng& rng) {
    Ring r = random_ring(rng, 3, 4);
    Ideal i(r, random_gens(r, rng, 3, 2));
    Poly f = random_form(r, 3, rng);
    Poly nf = normal_form(f, i.groebner());
    CHECK(i.contains(f - nf));
    CHECK(normal_form(nf, i.groebner()) == nf);
    Poly combo(r);
    for (const auto& g : i.generators()) combo += g * random_form(r, 4 - g.degree(), rng);
    CHECK(i.contains(combo));
  });
}

TEST_CASE("hilbert functions agree") {
  for_cases(kCases, 6, [](Rng& rng) {
    Ring r = random_ring(rng, 3, 4);
    auto gens = rng.below(2) ? random_gens(r, rng, 1 + static_cast<int>(rng.below(4)), 3) : sparse_gens(r, rng, 4, 3);
    Ideal i(r, gens);
    for (int d = 0; d <= 5; ++d) {
      const auto oracle = oracle_hilbert(r, gens, d);
      CHECK(i.hilbert_function(d) == oracle);
      CHECK(hilbert_function_macaulay(i, d) == oracle);
      CHECK(i.hilbert_series().coefficient(d) == oracle);
    }
    // the Hilbert polynomial takes the HF values in high degree
    auto hp = i.hilbert_polynomial();
    CHECK(hp(30) == i.hilbert_function(30));
    CHECK(hp(31) == i.hilbert_function(31));
  });
}

TEST_CASE("saturation") {
  for_cases(kCases, 7, [](Rng& rng) {
    Ring r = random_ring(rng, 3, 4);
    auto base = random_gens(r, rng, r.nvars - 1 - static_cast<int>(rng.below(2)), 2);
    // multiply by a power of the maximal ideal
    const int k = 1 + static_cast<int>(rng.below(2));
    std::vector<Poly> gens;
    for (const auto& g : base)
      for (const auto& m : monomials_of_degree(r, k)) gens.push_back(g * Poly::monomial(r, m));
    Ideal i(r, gens);
    Ideal s = saturate_irrelevant(i, rng.next());
    for (const auto& g : gens) CHECK(s.contains(g));
    CHECK(s.same_as(saturate_irrelevant(Ideal(r, base), 1)));
    CHECK(saturate_irrelevant(s, rng.next()).same_as(s));
    auto a = i.hilbert_polynomial(), b = s.hilbert_polynomial();
    CHECK(a.proj_dim == b.proj_dim);
    CHECK(a.degree == b.degree);
    CHECK(a(20) == b(20));
  });
}

TEST_CASE("ideal quotients") {
  for_cases(kCases, 8, [](Rng& rng) {
    Ring r = random_ring(rng, 3, 4);
    Ideal i(r, sparse_gens(r, rng, 4, 3));
    Poly f = sparse_form(r, 1 + static_cast<int>(rng.below(2)), rng, 2);
    if (f.is_zero()) return;
    Ideal q = ideal_quotient(i, f);
    for (const auto& g : i.generators()) CHECK(q.contains(g));
    for (const auto& g : q.generators()) CHECK(i.contains(g * f));
  });
}

TEST_CASE("euler identity") {
  for_cases(kCases, 9, [](Rng& rng) {
    Ring r = random_ring(rng, 2, 7);
    const int d = 1 + static_cast<int>(rng.below(5));
    std::vector<Poly> f{random_form(r, d, rng)};
    PolyMat j = jacobian(f);
    Poly e(r);
    for (int v = 0; v < r.nvars; ++v) e += Poly::variable(r, v) * j.at(0, v);
    CHECK(e == f[0].scaled(static_cast<Coeff>(d)));
  });
}

TEST_CASE("minors detect pointwise rank") {
  for_cases(kCases, 10, [](Rng& rng) {
    Ring r(PrimeField(32003), 3);
    const int rows = 2 + static_cast<int>(rng.below(3)), cols = rows + static_cast<int>(rng.below(3));
    PolyMat m = random_linear(r, rows, cols, rng);
    const int size = 1 + static_cast<int>(rng.below(rows));
    auto mins = minors_ideal(m, size);
    CHECK(mins.size() == subsets(rows, size).size() * subsets(cols, size).size());
    // points on the degeneracy locus come from the zero-dimensional case
    for (int t = 0; t < 5; ++t) {
      auto x = random_point(r.field, 3, rng);
      bool vanish = std::all_of(mins.begin(), mins.end(), [&](const Poly& p) { return p.evaluate(x) == 0; });
      CHECK(vanish == (rank(m.evaluate(x)) < size));
    }
  });
}

TEST_CASE("kernels") {
  for_cases(kCases, 11, [](Rng& rng) {
    PrimeField f;
    const int rows = 1 + static_cast<int>(rng.below(15)), cols = 1 + static_cast<int>(rng.below(15));
    const int target = static_cast<int>(rng.below(std::min(rows, cols) + 1));
    Matrix m = random_rank_matrix(f, rows, cols, target, rng);
    auto k = rref_kernel(m);
    CHECK(k.rank == oracle_rank(m));
    CHECK(k.rank <= target);
    CHECK(k.rank + static_cast<int>(k.basis.size()) == cols);
    for (const auto& v : k.basis) {
      auto w = m.apply(v);
      CHECK(std::all_of(w.begin(), w.end(), [](Coeff c) { return c == 0; }));
    }
    // basis vectors are independent
    Matrix b(f, 0, cols);
    for (const auto& v : k.basis) b.append_row(v);
    CHECK(oracle_rank(b) == static_cast<int>(k.basis.size()));
    CHECK(rank(m.transpose()) == k.rank);
  });
}

TEST_CASE("substitution commutes with evaluation") {
  for_cases(kCases, 12, [](Rng& rng) {
    Ring r = random_ring(rng, 3, 6);
    Ring t(r.field, r.nvars - 1);
    Matrix a = random_matrix(r.field, r.nvars, t.nvars, rng);
    std::vector<Poly> polys = random_gens(r, rng, 3, 3);
    auto img = substitute_linear(polys, a, t);
    auto y = random_point(r.field, t.nvars, rng);
    auto x = a.apply(y);
    for (size_t i = 0; i < polys.size(); ++i) CHECK(img[i].evaluate(y) == polys[i].evaluate(x));
  });
}

TEST_CASE("polynomial wire format round trips") {
  for_cases(kCases, 13, [](Rng& rng) {
    Ring r = random_ring(rng, 1, 8);
    auto polys = rng.below(2) ? random_gens(r, rng, 4, 4) : sparse_gens(r, rng, 4, 5);
    polys.push_back(Poly(r));
    auto back = polys_from_json(polys_to_json(polys));
    REQUIRE(back.size() == polys.size());
    for (size_t i = 0; i < polys.size(); ++i) CHECK(back[i].to_string() == polys[i].to_string());
    for (const auto& p : polys) CHECK(Poly::parse(r, p.to_string()) == p);
  });
}

TEST_CASE("degree formula on every table row and seed") {
  const TableRow rows[] = {TableRow::dp3, TableRow::dp4, TableRow::dp5, TableRow::dp6, TableRow::dp7,
                           TableRow::cy12, TableRow::cy13, TableRow::cy14, TableRow::cy15, TableRow::cy16};
  for_cases(5, 14, [&](Rng& rng) {
    for (TableRow row : rows) {
      CAPTURE(to_string(row));
      auto spec = table_row_spec(row, rng.next());
      BundleSpec b = BundleSpec::from_kernel(spec);
      CHECK(pfaffian_degree(b) == table_row_degree(row));
      CHECK(b.rank == spec.rank());
    }
  });
}

TEST_CASE("section spaces are annihilated by the constraint") {
  for_cases(5, 15, [](Rng& rng) {
    for (TableRow row : {TableRow::dp6, TableRow::dp7, TableRow::cy15}) {
      CAPTURE(to_string(row));
      auto spec = table_row_spec(row, rng.next());
      SectionSpace sp(spec);
      SkewSection a = random_section(sp, rng.next());
      a.a.check();
      PolyMat prod = spec.constraint * a.a;
      bool zero = true;
      for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) zero = zero && prod.at(i, j).is_zero();
      CHECK(zero);
    }
  });
}

TEST_CASE("tensor subspaces pair with their annihilators") {
  for_cases(5, 16, [](Rng& rng) {
    Side side = rng.below(2) ? Side::cy : Side::dp;
    TensorSubspace s = build_generic_subspace(side, rng.next());
    s.check();
    CHECK(annihilator_from_lambda(lambda_on_p2(s)) == s.annihilator);
    Matrix prod = s.basis * s.annihilator.transpose();
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
  });
}

}  // TEST_SUITE
