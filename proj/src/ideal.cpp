#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/parallel.hpp"

namespace pfaffcy {

struct Ideal::Cache {
  std::mutex mu;
  std::optional<GroebnerBasis> gb;
  std::optional<HilbertSeries> hs;
};

Ideal::Ideal(const Ring& ring, std::vector<Poly> gens) : ring_(ring), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!(g.ring() == ring)) throw Error(Errc::ring_mismatch, "ideal generator from a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(Errc::invalid_argument, "ideal generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Poly::constant(ring, 1)}); }

Ideal Ideal::irrelevant(const Ring& ring) {
  std::vector<Poly> vars;
  for (int i = 0; i < ring.nvars; ++i) vars.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  if (!cache_) throw Error(Errc::invalid_argument, "uninitialised ideal");
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = groebner_basis(ring_, gens_);
  return *cache_->gb;
}

const HilbertSeries& Ideal::hilbert_series() const {
  const GroebnerBasis& gb = groebner();
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->hs) {
    if (ring_.order.weighted()) throw Error(Errc::unsupported, "Hilbert series needs the standard grading");
    auto lms = gb.leading_monomials();
    cache_->hs = pfaffcy::hilbert_series(ring_.nvars, lms);
  }
  return *cache_->hs;
}

HilbertPolynomial Ideal::hilbert_polynomial() const { return pfaffcy::hilbert_polynomial(hilbert_series()); }

std::int64_t Ideal::hilbert_function(int d) const { return hilbert_series().coefficient(d); }

bool Ideal::contains(const Poly& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::same_as(const Ideal& o) const {
  if (!(ring_ == o.ring_)) return false;
  return groebner().elements == o.groebner().elements;
}

std::int64_t hilbert_function_macaulay(const Ideal& i, int d) {
  const Ring& ring = i.ring();
  if (d < 0) return 0;
  auto monos = monomials_of_degree(ring, d);
  auto idx = index_of(monos);
  EchelonBuilder ech(ring.field, static_cast<int>(monos.size()));
  std::vector<Coeff> row(monos.size());
  for (const auto& g : i.generators()) {
    int e = g.degree();
    if (e > d) continue;
    for (const auto& u : monomials_of_degree(ring, d - e)) {
      if (ech.rank() == static_cast<int>(monos.size())) break;
      std::fill(row.begin(), row.end(), 0);
      for (const auto& t : g.terms()) row[idx.at(t.m * u)] = t.c;
      ech.insert(row);
    }
  }
  return static_cast<std::int64_t>(monos.size()) - ech.rank();
}

std::vector<Poly> linear_reduce(std::span<const Poly> polys) {
  std::vector<Poly> out;
  if (polys.empty()) return out;
  const Ring& ring = polys.front().ring();
  std::map<int, std::vector<const Poly*>> by_degree;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw Error(Errc::invalid_argument, "linear_reduce needs homogeneous input");
    by_degree[p.degree()].push_back(&p);
  }
  for (const auto& [d, ps] : by_degree) {
    std::vector<Monomial> monos;
    {
      std::unordered_map<Monomial, bool, MonomialHash> seen;
      for (const Poly* p : ps)
        for (const auto& t : p->terms())
          if (seen.emplace(t.m, true).second) monos.push_back(t.m);
    }
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return ring.order.greater(a, b); });
    auto idx = index_of(monos);
    Matrix m(ring.field, static_cast<int>(ps.size()), static_cast<int>(monos.size()));
    for (std::size_t r = 0; r < ps.size(); ++r)
      for (const auto& t : ps[r]->terms()) m(static_cast<int>(r), idx.at(t.m)) = t.c;
    auto piv = rref(m);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (m(static_cast<int>(r), static_cast<int>(c))) terms.push_back({monos[c], m(static_cast<int>(r), static_cast<int>(c))});
      out.push_back(Poly::from_sorted_terms(ring, std::move(terms)));
    }
  }
  return out;
}

namespace {

// x_i -> sum_j a(i, j) y_j on homogeneous polynomials, with the images of
// all source monomials memoised as dense vectors over target monomials.
class LinearSubstitution {
 public:
  LinearSubstitution(const Ring& source, const Matrix& a, const Ring& target) : source_(source), a_(a), target_(target) {
    if (a.rows() != source.nvars || a.cols() != target.nvars)
      throw Error(Errc::invalid_argument, "substitution matrix has the wrong shape");
    if (source.prime() != target.prime()) throw Error(Errc::ring_mismatch, "substitution changes the prime");
    if (source.order.weighted() || target.order.weighted())
      throw Error(Errc::unsupported, "linear substitution needs the standard grading");
    memo_.emplace(Monomial(), std::vector<Coeff>{1});
    ensure_degree(0);
  }

  Poly apply(const Poly& f) {
    if (f.is_zero()) return Poly(target_);
    if (!f.is_homogeneous()) {
      std::vector<Poly> images;
      for (int i = 0; i < source_.nvars; ++i) {
        Poly im(target_);
        for (int j = 0; j < target_.nvars; ++j) im += Poly::monomial(target_, Monomial::variable(j), a_(i, j));
        images.push_back(im);
      }
      return f.substitute(images);
    }
    const int d = f.degree();
    ensure_degree(d);
    const PrimeField& fld = target_.field;
    DenseAccumulator acc(fld, static_cast<int>(monos_[d].size()));
    for (const auto& t : f.terms()) acc.axpy_dense(t.c, image(t.m), 0);
    acc.reduce_all();
    std::vector<Term> terms;
    for (std::size_t k = 0; k < monos_[d].size(); ++k)
      if (acc.data()[k]) terms.push_back({monos_[d][k], static_cast<Coeff>(acc.data()[k])});
    return Poly::from_sorted_terms(target_, std::move(terms));
  }

 private:
  const Ring& source_;
  const Matrix& a_;
  const Ring& target_;
  std::vector<std::vector<Monomial>> monos_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index_;
  std::unordered_map<Monomial, std::vector<Coeff>, MonomialHash> memo_;

  void ensure_degree(int d) {
    while (static_cast<int>(monos_.size()) <= d) {
      int k = static_cast<int>(monos_.size());
      monos_.push_back(monomials_of_degree(target_, k));
      index_.push_back(index_of(monos_.back()));
    }
  }

  const std::vector<Coeff>& image(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    int var = 0;
    while (m[var] == 0) ++var;
    Monomial rest = m;
    rest.set(var, m[var] - 1);
    const int k = m.degree();
    ensure_degree(k);
    std::vector<Coeff> prev = image(rest);
    const PrimeField& fld = target_.field;
    std::vector<Coeff> out(monos_[k].size(), 0);
    for (std::size_t s = 0; s < prev.size(); ++s) {
      if (!prev[s]) continue;
      for (int j = 0; j < target_.nvars; ++j) {
        Coeff c = a_(var, j);
        if (!c) continue;
        int t = index_[k].at(monos_[k - 1][s] * Monomial::variable(j));
        out[t] = fld.add(out[t], fld.mul(prev[s], c));
      }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Poly> substitute_linear(std::span<const Poly> polys, const Matrix& a, const Ring& target) {
  std::vector<Poly> out;
  if (polys.empty()) return out;
  LinearSubstitution sub(polys.front().ring(), a, target);
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(sub.apply(p));
  return out;
}

Matrix random_full_rank(const PrimeField& f, int rows, int cols, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = rng.element(f);
    if (rank(m) == std::min(rows, cols)) return m;
  }
  throw Error(Errc::degenerate_sample, "could not sample a full-rank matrix");
}

Ideal ideal_quotient(const Ideal& i, const Poly& f) {
  const Ring& ring = i.ring();
  if (!(f.ring() == ring)) throw Error(Errc::ring_mismatch, "quotient by a polynomial from another ring");
  if (f.is_zero() || !f.is_homogeneous()) throw Error(Errc::invalid_argument, "quotient needs a nonzero homogeneous form");
  if (f.is_constant()) return i;
  if (ring.nvars + 1 > kMaxVars) throw Error(Errc::unsupported, "no room for the auxiliary variable");
  const int e = f.degree();
  if (e > 255) throw Error(Errc::unsupported, "quotient degree too large");
  std::array<std::uint8_t, kMaxVars> w{};
  for (auto& x : w) x = 1;
  w[ring.nvars] = static_cast<std::uint8_t>(e);
  Ring big(ring.field, ring.nvars + 1, MonomialOrder(w));
  std::vector<Poly> gens;
  for (const auto& g : i.generators()) gens.push_back(g.embed(big));
  gens.push_back(Poly::variable(big, ring.nvars) - f.embed(big));
  GroebnerBasis gb = groebner_basis(big, gens);
  std::vector<Poly> images;
  for (int v = 0; v < ring.nvars; ++v) images.push_back(Poly::variable(ring, v));
  images.push_back(f);
  std::vector<Poly> out;
  const Monomial y = Monomial::variable(ring.nvars);
  for (const auto& g : gb.elements) {
    Poly h = g;
    if (y.divides(g.leading_monomial())) {
      std::vector<Term> terms;
      for (const auto& t : g.terms()) terms.push_back({t.m / y, t.c});
      h = Poly::from_sorted_terms(big, std::move(terms));
    }
    out.push_back(h.substitute(images));
  }
  return Ideal(ring, linear_reduce(out));
}

std::vector<Poly> saturate_last_variable(const Ideal& i) {
  const Ring& ring = i.ring();
  const int last = ring.nvars - 1;
  std::vector<Poly> out;
  for (const auto& g : i.groebner().elements) {
    int k = g.leading_monomial()[last];
    for (const auto& t : g.terms()) k = std::min(k, t.m[last]);
    if (k == 0) {
      out.push_back(g);
      continue;
    }
    Monomial y = Monomial::variable(last, k);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({t.m / y, t.c});
    out.push_back(Poly::from_sorted_terms(ring, std::move(terms)));
  }
  return out;
}

namespace {

// Minimal homogeneous generators of the ideal spanned by `gens` (which must
// contain a generating set), chosen greedily in increasing degree.
std::vector<Poly> minimal_generators(const Ring& ring, std::vector<Poly> gens) {
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return ring.order.greater(b.leading_monomial(), a.leading_monomial());
  });
  std::vector<Poly> chosen;
  std::size_t k = 0;
  while (k < gens.size()) {
    int d = gens[k].degree();
    std::size_t e = k;
    while (e < gens.size() && gens[e].degree() == d) ++e;
    auto monos = monomials_of_degree(ring, d);
    auto idx = index_of(monos);
    EchelonBuilder ech(ring.field, static_cast<int>(monos.size()));
    std::vector<Coeff> row(monos.size());
    for (const auto& c : chosen)
      for (const auto& u : monomials_of_degree(ring, d - c.degree())) {
        std::fill(row.begin(), row.end(), 0);
        for (const auto& t : c.terms()) row[idx.at(t.m * u)] = t.c;
        ech.insert(row);
      }
    std::vector<Poly> batch;
    for (std::size_t t = k; t < e; ++t) {
      std::fill(row.begin(), row.end(), 0);
      for (const auto& term : gens[t].terms()) row[idx.at(term.m)] = term.c;
      if (ech.insert(row)) batch.push_back(gens[t]);
    }
    for (auto& b : linear_reduce(batch)) chosen.push_back(std::move(b));
    k = e;
  }
  return chosen;
}

std::vector<Poly> saturate_once(const Ideal& i, Rng& rng) {
  const Ring& ring = i.ring();
  Matrix a = random_full_rank(ring.field, ring.nvars, ring.nvars, rng);
  Ideal moved(ring, substitute_linear(i.generators(), a, ring));
  std::vector<Poly> sat = saturate_last_variable(moved);
  return substitute_linear(sat, inverse(a), ring);
}

}  // namespace

Ideal saturate_irrelevant(const Ideal& i, std::uint64_t seed) {
  const Ring& ring = i.ring();
  if (ring.order.weighted()) throw Error(Errc::unsupported, "saturation needs the standard grading");
  Rng rng(seed ^ 0x5A7u);
  Ideal current = i;
  for (int round = 0; round < 6; ++round) {
    std::vector<Poly> sat = saturate_once(current, rng);
    for (const auto& g : sat)
      if (g.is_constant()) {
        Ideal u = Ideal::unit(ring);
        u.mark_saturated();
        return u;
      }
    Ideal next(ring, minimal_generators(ring, Ideal(ring, sat).groebner().elements));
    bool stable = round > 0 && next.hilbert_series().numerator == current.hilbert_series().numerator;
    current = std::move(next);
    if (stable) {
      current.mark_saturated();
      return current;
    }
  }
  throw Error(Errc::inconclusive, "saturation did not stabilise");
}

Ideal random_slice(const Ideal& i, int count, Rng& rng, Matrix* param) {
  const Ring& ring = i.ring();
  if (count < 0 || count >= ring.nvars) throw Error(Errc::invalid_argument, "slice codimension out of range");
  Ring target(ring.field, ring.nvars - count);
  Matrix a = random_full_rank(ring.field, ring.nvars, target.nvars, rng);
  if (param) *param = a;
  return Ideal(target, linear_reduce(substitute_linear(i.generators(), a, target)));
}

SliceCertificate certify_by_slicing(const Ideal& i, int proj_dim, Rng& rng) {
  SliceCertificate cert;
  if (proj_dim < 0) {
    cert.proj_dim = i.empty_scheme() ? -1 : i.hilbert_polynomial().proj_dim;
    cert.dimension_confirmed = cert.proj_dim == -1;
    return cert;
  }
  Ideal points = random_slice(i, proj_dim, rng);
  HilbertPolynomial hp = points.hilbert_polynomial();
  if (hp.proj_dim != 0) {
    cert.proj_dim = hp.proj_dim < 0 ? -1 : proj_dim + hp.proj_dim;
    return cert;
  }
  cert.proj_dim = proj_dim;
  cert.degree = hp.degree;
  Ideal empty = random_slice(i, proj_dim + 1, rng);
  cert.dimension_confirmed = empty.empty_scheme();
  return cert;
}

}  // namespace pfaffcy
