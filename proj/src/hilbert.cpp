#include <algorithm>
#include <numeric>
#include <sstream>

#include "pfaffcy/groebner.hpp"

namespace pfaffcy {

namespace {

using Series = std::vector<std::int64_t>;

void add_into(Series& a, const Series& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
}

Series times_one_minus_tpow(const Series& a, int e) {
  Series out(a.size() + e, 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] += a[k];
    out[k + e] -= a[k];
  }
  return out;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.word(0) != b.word(0) ? a.word(0) < b.word(0) : a.word(1) < b.word(1);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of S/(gens), by pivoting on a variable power.
Series numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!Monomial::coprime(gens[a], gens[b])) coprime = false;
  if (coprime) {
    Series s{1};
    for (const auto& g : gens) s = times_one_minus_tpow(s, g.degree());
    return s;
  }
  // variable occurring in the most non-pure-power generators
  std::vector<int> count(nvars, 0);
  for (const auto& g : gens) {
    int support = 0;
    for (int v = 0; v < nvars; ++v) support += g[v] > 0;
    if (support < 2) continue;
    for (int v = 0; v < nvars; ++v) count[v] += g[v] > 0;
  }
  int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g[var] > 0) exps.push_back(g[var]);
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (e == exps.back() && exps.size() > 1) e = exps[(exps.size() - 1) / 2];
  Monomial pivot = Monomial::variable(var, e);
  std::vector<Monomial> with = gens;
  with.push_back(pivot);
  std::vector<Monomial> quot;
  quot.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, std::max(0, g[var] - e));
    quot.push_back(q);
  }
  Series s = numerator(std::move(with), nvars);
  add_into(s, numerator(std::move(quot), nvars), e);
  trim(s);
  return s;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HilbertSeries hilbert_series(int nvars, std::span<const Monomial> monomials) {
  HilbertSeries hs;
  hs.nvars = nvars;
  hs.numerator = numerator(std::vector<Monomial>(monomials.begin(), monomials.end()), nvars);
  return hs;
}

std::int64_t HilbertSeries::coefficient(int d) const {
  if (d < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= d; ++k) {
    if (nvars == 0) {
      if (static_cast<int>(k) == d) s += numerator[k];
      continue;
    }
    s += numerator[k] * binom(d - static_cast<int>(k) + nvars - 1, nvars - 1);
  }
  return s;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs) {
  HilbertPolynomial hp;
  Series q = hs.numerator;
  trim(q);
  if (q.empty()) return hp;
  int a = 0;
  // divide by (1 - t) while q(1) = 0
  for (;;) {
    std::int64_t at1 = 0;
    for (auto c : q) at1 += c;
    if (at1 != 0 || q.empty()) break;
    Series r(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = std::move(r);
    trim(q);
    ++a;
  }
  const int krull = hs.nvars - a;
  if (krull <= 0) return hp;
  hp.proj_dim = krull - 1;
  hp.q = q;
  for (auto c : q) hp.degree += c;
  return hp;
}

std::int64_t HilbertPolynomial::operator()(std::int64_t d) const {
  if (proj_dim < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    // C(d - k + D, D) as a polynomial, valid for all integers d
    std::int64_t num = 1, den = 1;
    for (int i = 1; i <= proj_dim; ++i) {
      num *= d - static_cast<std::int64_t>(k) + i;
      den *= i;
    }
    s += q[k] * (num / den);
  }
  return s;
}

std::int64_t HilbertPolynomial::denominator() const {
  std::int64_t f = 1;
  for (int i = 2; i <= std::max(proj_dim, 0); ++i) f *= i;
  return f;
}

std::vector<std::int64_t> HilbertPolynomial::numerators() const {
  if (proj_dim < 0) return {0};
  std::vector<std::int64_t> total(proj_dim + 1, 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    std::vector<std::int64_t> poly{1};
    for (int i = 1; i <= proj_dim; ++i) {
      // multiply by (d + i - k)
      std::int64_t c = i - static_cast<std::int64_t>(k);
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] += poly[j] * c;
      }
      poly = std::move(next);
    }
    for (std::size_t j = 0; j < poly.size(); ++j) total[j] += q[k] * poly[j];
  }
  return total;
}

std::string HilbertPolynomial::to_string() const {
  if (proj_dim < 0) return "0";
  auto nums = numerators();
  std::int64_t den = denominator();
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(nums.size()) - 1; j >= 0; --j) {
    std::int64_t n = nums[j];
    if (n == 0) continue;
    std::int64_t g = std::gcd(n < 0 ? -n : n, den);
    std::int64_t a = n / g, b = den / g;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    std::int64_t mag = a < 0 ? -a : a;
    if (mag != 1 || b != 1 || j == 0) {
      os << mag;
      if (b != 1) os << "/" << b;
      if (j > 0) os << "*";
    }
    if (j > 0) os << "d" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace pfaffcy
