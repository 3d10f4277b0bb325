#include "doctest.h"

#include <random>

#include "pfaffcy/field.hpp"
#include "pfaffcy/poly.hpp"
#include "support.hpp"

using namespace pfaffcy;
using namespace testing;

namespace {

// Extended Euclid over the integers.
std::int64_t euclid_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % p) + p) % p;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("field operations") {
  PrimeField f7(7);
  CHECK(f7.inv(3) == 5);
  CHECK_THROWS_AS(f7.inv(0), Error);
  PrimeField f(32003);
  CHECK(f.mul(0, 12345) == 0);
  std::mt19937_64 g(1);
  for (int i = 0; i < 200; ++i) {
    Coeff a = 1 + g() % 32002;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.inv(a) == euclid_inverse(a, 32003));
  }
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_signed(32002) == -1);
}

TEST_CASE("rref_kernel") {
  PrimeField f;
  Matrix id = Matrix::identity(f, 5);
  auto k = rref_kernel(id);
  CHECK(k.rank == 5);
  CHECK(k.basis.empty());

  auto z = rref_kernel(Matrix(f, 3, 4));
  CHECK(z.rank == 0);
  CHECK(z.basis.size() == 4);

  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix m = random_rank_matrix(f, 20, 30, 8 + 3 * trial, rng);
    auto res = rref_kernel(m);
    CHECK(res.rank == oracle_rank(m));
    CHECK(res.rank + static_cast<int>(res.basis.size()) == 30);
    for (const auto& v : res.basis) {
      auto mv = m.apply(v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](Coeff c) { return c == 0; }));
    }
    // row permutations do not change the canonical kernel basis
    Matrix p(f, 0, 30);
    for (int i = 19; i >= 0; --i) p.append_row(m.row(i));
    CHECK(rref_kernel(p).basis == res.basis);
  }
}

TEST_CASE("poly arithmetic") {
  Ring r(PrimeField(32003), 3);
  auto a = Poly::parse(r, "x0 + x1");
  auto b = Poly::parse(r, "x0 - x1");
  CHECK((a * b) == Poly::parse(r, "x0^2 - x1^2"));
  CHECK((a * b).to_string() == "x0^2 - x1^2");
  CHECK((a * Poly(r)).is_zero());

  Ring r7(PrimeField(32003), 7);
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Poly f = random_form(r7, 3, rng), g = random_form(r7, 3, rng);
    Poly fg = f * g;
    CHECK(fg.homogeneous_degree() == 6);
    for (int i = 0; i < 20; ++i) {
      auto x = random_point(r7.field, 7, rng);
      CHECK(fg.evaluate(x) == r7.field.mul(f.evaluate(x), g.evaluate(x)));
      CHECK((f + g).evaluate(x) == r7.field.add(f.evaluate(x), g.evaluate(x)));
    }
  }
}

TEST_CASE("substitute") {
  Ring r(PrimeField(32003), 7);
  std::vector<Poly> images;
  for (int v = 0; v < 7; ++v) images.push_back(Poly::variable(r, v));
  images[6] = Poly(r);
  CHECK(Poly::parse(r, "x0*x6").substitute(images).is_zero());
  images[6] = Poly::variable(r, 0);
  CHECK(Poly::parse(r, "x0 + x6").substitute(images) == Poly::parse(r, "2*x0"));

  Rng rng(5);
  Poly f = random_form(r, 3, rng);
  std::vector<Poly> id;
  for (int v = 0; v < 7; ++v) id.push_back(Poly::variable(r, v));
  CHECK(f.substitute(id) == f);
  std::vector<Poly> lin;
  for (int v = 0; v < 7; ++v) lin.push_back(random_form(r, 1, rng));
  Poly g = f.substitute(lin);
  for (int i = 0; i < 10; ++i) {
    auto x = random_point(r.field, 7, rng);
    std::vector<Coeff> y;
    for (const auto& l : lin) y.push_back(l.evaluate(x));
    CHECK(g.evaluate(x) == f.evaluate(y));
  }
}

TEST_CASE("pfaffians") {
  Ring r(PrimeField(32003), 6);
  PolyMat two(r, std::vector<int>{0, 0}, std::vector<int>{1, 1}, true);
  two.set(0, 1, Poly::variable(r, 2));
  std::vector<int> s01{0, 1};
  CHECK(pfaffian(two, s01) == Poly::variable(r, 2));
  CHECK(pfaffian(two, std::vector<int>{}) == Poly::constant(r, 1));
  CHECK_THROWS_AS(pfaffian(two, std::vector<int>{0}), Error);

  Rng rng(9);
  PolyMat a = random_skew(r, {0, 0, 0, 0}, rng);
  Poly closed = a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) + a.at(0, 3) * a.at(1, 2);
  std::vector<int> all{0, 1, 2, 3};
  CHECK(pfaffian(a, all) == closed);

  auto pf5 = principal_pfaffians(random_skew(r, std::vector<int>(5, 0), rng), 4);
  CHECK(pf5.size() == 5);
  for (const auto& p : pf5) CHECK(p.homogeneous_degree() == 2);

  Ring r7(PrimeField(32003), 7);
  auto pf7 = principal_pfaffians(random_skew(r7, std::vector<int>(7, 0), rng), 6);
  CHECK(pf7.size() == 7);
  for (const auto& p : pf7) CHECK(p.homogeneous_degree() == 3);
}

TEST_CASE("16 x 16 principal pfaffians") {
  Ring r7(PrimeField(32003), 7);
  Rng rng(2);
  auto pf = principal_pfaffians(random_skew(r7, std::vector<int>(16, 0), rng), 12);
  CHECK(pf.size() == 1820);
  for (const auto& p : pf) CHECK(p.homogeneous_degree() == 6);
}

TEST_CASE("minors") {
  Ring r3(PrimeField(32003), 3);
  PolyMat c(r3, std::vector<int>{0, 0}, std::vector<int>{0, 0});
  c.set(0, 0, Poly::constant(r3, 1));
  c.set(1, 1, Poly::constant(r3, 1));
  auto one = minors_ideal(c, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Poly::constant(r3, 1));

  Rng rng(4);
  PolyMat m = random_linear(r3, 7, 5, rng);
  auto q = minors_ideal(m, 5);
  CHECK(q.size() == 21);
  for (const auto& p : q) CHECK(p.homogeneous_degree() == 5);

  // pointwise: all 2 x 2 minors vanish iff rank < 2
  PolyMat small = random_linear(r3, 2, 3, rng);
  auto m2 = minors_ideal(small, 2);
  for (int i = 0; i < 20; ++i) {
    auto x = random_point(r3.field, 3, rng);
    bool vanish = std::all_of(m2.begin(), m2.end(), [&](const Poly& p) { return p.evaluate(x) == 0; });
    CHECK(vanish == (rank(small.evaluate(x)) < 2));
  }
  // outer product of linear forms and constants has rank one
  PolyMat rank_one(r3, std::vector<int>{0, 0}, std::vector<int>{1, 1, 1});
  Poly u0 = random_form(r3, 1, rng), u1 = random_form(r3, 1, rng);
  for (int j = 0; j < 3; ++j) {
    Coeff v = rng.element(r3.field);
    rank_one.set(0, j, u0.scaled(v));
    rank_one.set(1, j, u1.scaled(v));
  }
  for (const auto& p : minors_ideal(rank_one, 2)) CHECK(p.is_zero());
}

TEST_CASE("jacobian") {
  Ring r(PrimeField(32003), 7);
  std::vector<Poly> sq{Poly::parse(r, "x0^2")};
  PolyMat j = jacobian(sq);
  CHECK(j.at(0, 0) == Poly::parse(r, "2*x0"));
  for (int v = 1; v < 7; ++v) CHECK(j.at(0, v).is_zero());
  std::vector<Poly> xy{Poly::parse(r, "x0*x1")};
  PolyMat j2 = jacobian(xy);
  CHECK(j2.at(0, 0) == Poly::variable(r, 1));
  CHECK(j2.at(0, 1) == Poly::variable(r, 0));

  Rng rng(6);
  for (int d = 1; d <= 5; ++d) {
    std::vector<Poly> f{random_form(r, d, rng)};
    PolyMat jf = jacobian(f);
    Poly euler(r);
    for (int v = 0; v < 7; ++v) euler += Poly::variable(r, v) * jf.at(0, v);
    CHECK(euler == f[0].scaled(static_cast<Coeff>(d)));
  }
}

}  // TEST_SUITE
