#include <algorithm>
#include <unordered_set>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/polymat.hpp"

namespace pfaffcy {

std::string to_string(ProbeMode m) {
  switch (m) {
    case ProbeMode::points: return "points";
    case ProbeMode::slice: return "slice";
    case ProbeMode::full: return "full";
  }
  return "?";
}

ProbeMode probe_mode_from_string(const std::string& s) {
  if (s == "points") return ProbeMode::points;
  if (s == "slice") return ProbeMode::slice;
  if (s == "full") return ProbeMode::full;
  throw Error(Errc::invalid_argument, "unknown probe mode '" + s + "'");
}

std::string ProbeReport::outcome_string() const {
  switch (outcome) {
    case Outcome::smooth: return "smooth";
    case Outcome::singular: return "singular";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

Poly random_form(const Ring& ring, int d, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring, d)) terms.push_back({m, rng.element(ring.field)});
  return Poly::from_terms(ring, std::move(terms));
}

namespace {

// `count` random homogeneous combinations sum_i l_i g_i of a common degree.
// At a point of V(gens) their Jacobian rows are combinations of the rows of
// the full Jacobian, so full rank of the combinations implies full rank.
std::vector<Poly> random_combinations(std::span<const Poly> gens, int count, Rng& rng) {
  const Ring& ring = gens.front().ring();
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());
  std::vector<Poly> out;
  for (int k = 0; k < count; ++k) {
    Poly f(ring);
    for (const auto& g : gens) f += random_form(ring, top - g.degree(), rng) * g;
    out.push_back(std::move(f));
  }
  return out;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr std::int64_t kMinorBudget = 20000;

// Empty-scheme test for gens + (codim-size minors of their Jacobian), first
// with random row combinations, then with every minor.
struct RankTest {
  bool empty = false;
  bool exhaustive = false;
  int locus_dim = -1;
};

// With r row combinations the combined Jacobian loses rank on a locus of
// codimension r - codim + 1 in the variety, so r = codim + dim avoids it;
// the minors are then folded into dim + 2 random scalar combinations, whose
// common zeros on the variety are those of all the minors.
RankTest jacobian_rank_test(const std::vector<Poly>& gens, int codim, int dim, Rng& rng) {
  RankTest out;
  const Ring& ring = gens.front().ring();
  const int rows = std::min<int>(static_cast<int>(gens.size()), codim + std::max(dim, 0));
  auto combos = random_combinations(gens, rows, rng);
  std::vector<Poly> minors = linear_reduce(minors_ideal(jacobian(combos), codim));
  std::vector<Poly> all = gens;
  const int folded = dim + 2;
  if (static_cast<int>(minors.size()) > folded) {
    for (int k = 0; k < folded; ++k) {
      Poly f(ring);
      for (const auto& m : minors) f += m.scaled(rng.element(ring.field));
      all.push_back(std::move(f));
    }
  } else {
    for (auto& m : minors) all.push_back(std::move(m));
  }
  Ideal quick(ring, linear_reduce(all));
  if (quick.empty_scheme()) {
    out.empty = true;
    return out;
  }
  if (binom(static_cast<int>(gens.size()), codim) * binom(ring.nvars, codim) > kMinorBudget) {
    out.locus_dim = quick.hilbert_polynomial().proj_dim;
    return out;
  }
  all = gens;
  for (auto& m : minors_ideal(jacobian(gens), codim)) all.push_back(std::move(m));
  Ideal exact(ring, linear_reduce(all));
  out.exhaustive = true;
  out.empty = exact.empty_scheme();
  out.locus_dim = out.empty ? -1 : exact.hilbert_polynomial().proj_dim;
  return out;
}

std::vector<std::vector<Coeff>> points_rec(const Ideal& k) {
  const Ring& ring = k.ring();
  const int m = ring.nvars;
  std::vector<std::vector<Coeff>> out;
  if (k.empty_scheme()) return out;
  HilbertPolynomial hp = k.hilbert_polynomial();
  if (hp.proj_dim != 0) throw Error(Errc::positive_dimensional, "rational_points needs a zero-dimensional scheme");
  if (m == 1) return {{1}};
  const GroebnerBasis& gb = k.groebner();
  int top = 0;
  for (const auto& g : gb.elements) top = std::max(top, g.degree());
  int d = top;
  while (k.hilbert_function(d) != hp.degree || k.hilbert_function(d + 1) != hp.degree) {
    if (++d > top + hp.degree + 2) throw Error(Errc::inconsistent, "Hilbert function does not settle");
  }
  auto lms = gb.leading_monomials();
  auto standard = [&](int deg) {
    std::vector<Monomial> s;
    for (const auto& mono : monomials_of_degree(ring, deg)) {
      bool in = false;
      for (const auto& l : lms)
        if (l.divides(mono)) {
          in = true;
          break;
        }
      if (!in) s.push_back(mono);
    }
    return s;
  };
  auto b0 = standard(d);
  auto b1 = standard(d + 1);
  const int n = static_cast<int>(b0.size());
  std::unordered_map<Monomial, int, MonomialHash> idx1;
  for (int i = 0; i < n; ++i) idx1.emplace(b1[i], i);
  auto mult = [&](int var) {
    Matrix t(ring.field, n, n);
    for (int j = 0; j < n; ++j) {
      Poly p = normal_form(Poly::monomial(ring, b0[j] * Monomial::variable(var)), gb);
      for (const auto& term : p.terms()) t(idx1.at(term.m), j) = term.c;
    }
    return t;
  };
  Matrix tl = mult(m - 1);
  if (determinant(tl) == 0) throw Error(Errc::degenerate_sample, "points at infinity in the chosen chart");
  Matrix mm = inverse(tl) * mult(0);
  std::vector<Coeff> cp = charpoly(mm);
  const PrimeField& f = ring.field;
  if (f.prime() > (1u << 20)) throw Error(Errc::unsupported, "rational point search limited to primes below 2^20");
  Ring smaller(ring.field, m - 1);
  for (Coeff a = 0; a < f.prime(); ++a) {
    Coeff v = 0;
    for (int i = static_cast<int>(cp.size()) - 1; i >= 0; --i) v = f.add(f.mul(v, a), cp[i]);
    if (v) continue;
    // y0 = a * y_last, remaining variables kept
    Matrix sub(f, m, m - 1);
    sub(0, m - 2) = a;
    for (int i = 1; i < m; ++i) sub(i, i - 1) = 1;
    Ideal restricted(smaller, linear_reduce(substitute_linear(k.generators(), sub, smaller)));
    for (auto& q : points_rec(restricted)) {
      std::vector<Coeff> pt(m);
      pt[0] = f.mul(a, q[m - 2]);
      for (int i = 1; i < m; ++i) pt[i] = q[i - 1];
      out.push_back(std::move(pt));
    }
  }
  return out;
}

std::vector<Coeff> apply_param(const Matrix& a, const std::vector<Coeff>& y) { return a.apply(y); }

int rank_at(const PolyMat& jac, const std::vector<Coeff>& x) { return rank(jac.evaluate(x)); }

}  // namespace

std::vector<std::vector<Coeff>> rational_points(const Ideal& zero_dim) {
  auto pts = points_rec(zero_dim);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::vector<Coeff>> out;
  for (auto& p : pts) {
    bool on = true;
    for (const auto& g : zero_dim.generators())
      if (g.evaluate(p) != 0) {
        on = false;
        break;
      }
    if (on) out.push_back(std::move(p));
  }
  return out;
}

ProbeReport singular_probe(const Ideal& i, int expected_codim, ProbeMode mode, ProbeOptions opt) {
  ProbeReport rep;
  rep.mode = mode;
  const Ring& ring = i.ring();
  Rng rng(opt.seed ^ 0x9B0Eu);
  std::vector<Poly> gens = linear_reduce(i.generators());
  HilbertPolynomial hp = i.hilbert_polynomial();
  if (hp.proj_dim < 0) {
    rep.outcome = ProbeReport::Outcome::smooth;
    rep.detail = "empty scheme";
    return rep;
  }
  if (hp.proj_dim + expected_codim != ring.nvars - 1) {
    rep.outcome = ProbeReport::Outcome::singular;
    rep.detail = "dimension " + std::to_string(hp.proj_dim) + " does not match codimension " + std::to_string(expected_codim);
    return rep;
  }
  switch (mode) {
    case ProbeMode::full: {
      RankTest t = jacobian_rank_test(gens, expected_codim, hp.proj_dim, rng);
      rep.samples = 1;
      if (t.empty) {
        rep.outcome = ProbeReport::Outcome::smooth;
        rep.detail = t.exhaustive ? "singular locus empty (all minors)" : "singular locus empty";
      } else if (t.exhaustive) {
        rep.outcome = ProbeReport::Outcome::singular;
        rep.singular_dim = t.locus_dim;
        rep.detail = "singular locus of dimension " + std::to_string(t.locus_dim);
      } else {
        rep.outcome = ProbeReport::Outcome::inconclusive;
        rep.singular_dim = t.locus_dim;
        rep.detail = "random minors do not cut out the empty set and the full minor ideal is too large";
      }
      return rep;
    }
    case ProbeMode::slice: {
      Ideal points = random_slice(i, hp.proj_dim, rng);
      HilbertPolynomial php = points.hilbert_polynomial();
      rep.samples = static_cast<int>(php.degree);
      if (php.proj_dim != 0 || php.degree != hp.degree) {
        rep.outcome = ProbeReport::Outcome::singular;
        rep.detail = "slice has length " + std::to_string(php.degree) + ", expected " + std::to_string(hp.degree);
        return rep;
      }
      std::vector<Poly> pg = linear_reduce(points.generators());
      RankTest t = jacobian_rank_test(pg, expected_codim, 0, rng);
      if (t.empty) {
        rep.outcome = ProbeReport::Outcome::smooth;
        rep.detail = "slice reduced of length " + std::to_string(php.degree);
      } else if (t.exhaustive) {
        rep.outcome = ProbeReport::Outcome::singular;
        rep.detail = "slice is not reduced";
      } else {
        rep.outcome = ProbeReport::Outcome::inconclusive;
        rep.detail = "slice reducedness not decided";
      }
      return rep;
    }
    case ProbeMode::points: {
      PolyMat jac = jacobian(gens);
      int found = 0;
      for (int attempt = 0; attempt < opt.slice_budget && found < opt.points_wanted; ++attempt) {
        Matrix param;
        Ideal pts_ideal = random_slice(i, hp.proj_dim, rng, &param);
        std::vector<std::vector<Coeff>> pts;
        try {
          pts = rational_points(pts_ideal);
        } catch (const Error& e) {
          if (e.code() == Errc::degenerate_sample) continue;
          throw;
        }
        for (const auto& y : pts) {
          auto x = apply_param(param, y);
          ++found;
          int r = rank_at(jac, x);
          if (r < expected_codim) {
            rep.outcome = ProbeReport::Outcome::singular;
            rep.samples = found;
            rep.detail = "Jacobian rank " + std::to_string(r) + " at a sampled point";
            return rep;
          }
        }
      }
      rep.samples = found;
      rep.outcome = found >= opt.points_wanted ? ProbeReport::Outcome::smooth : ProbeReport::Outcome::inconclusive;
      rep.detail = std::to_string(found) + " rational points with full Jacobian rank";
      return rep;
    }
  }
  return rep;
}

}  // namespace pfaffcy
