#include <algorithm>
#include <map>
#include <unordered_map>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/parallel.hpp"

namespace pfaffcy {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(g.leading_monomial());
  return out;
}

namespace {

struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<Coeff> vals;
};

struct RowSpec {
  const Poly* poly;
  Monomial mult;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int degree;
};

// Columns are the monomials touched by a set of rows, sorted decreasingly;
// reducers are chosen by the caller-supplied function.
class SymbolicMatrix {
 public:
  explicit SymbolicMatrix(const Ring& ring) : ring_(ring) {}

  int intern(const Monomial& m) {
    auto [it, inserted] = ids_.try_emplace(m, static_cast<int>(monos_.size()));
    if (inserted) {
      monos_.push_back(m);
      queue_.push_back(it->second);
    }
    return it->second;
  }
  void add_monomials(const RowSpec& r) {
    for (const auto& t : r.poly->terms()) intern(t.m * r.mult);
  }
  template <class FindReducer>
  void close(FindReducer&& find) {
    while (!queue_.empty()) {
      int id = queue_.back();
      queue_.pop_back();
      std::optional<RowSpec> red = find(monos_[id]);
      if (red) {
        pivot_spec_.emplace(id, *red);
        add_monomials(*red);
      }
    }
  }
  void finalize() {
    order_.resize(monos_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) order_[k] = static_cast<int>(k);
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return ring_.order.greater(monos_[a], monos_[b]); });
    col_of_.assign(monos_.size(), 0);
    for (std::size_t c = 0; c < order_.size(); ++c) col_of_[order_[c]] = static_cast<std::uint32_t>(c);
  }
  int ncols() const { return static_cast<int>(monos_.size()); }
  const Monomial& monomial_at_col(int c) const { return monos_[order_[c]]; }
  std::uint32_t col(const Monomial& m) const { return col_of_[ids_.at(m)]; }

  SparseRow make_row(const RowSpec& r) const {
    SparseRow row;
    row.cols.reserve(r.poly->size());
    row.vals.reserve(r.poly->size());
    for (const auto& t : r.poly->terms()) {
      row.cols.push_back(col_of_[ids_.at(t.m * r.mult)]);
      row.vals.push_back(t.c);
    }
    return row;
  }
  // pivot rows indexed by column
  std::vector<std::optional<SparseRow>> pivot_rows() const {
    std::vector<std::optional<SparseRow>> out(monos_.size());
    for (const auto& [id, spec] : pivot_spec_) out[col_of_[id]] = make_row(spec);
    return out;
  }
  Poly row_to_poly(const SparseRow& row) const {
    std::vector<Term> terms;
    terms.reserve(row.cols.size());
    for (std::size_t k = 0; k < row.cols.size(); ++k) terms.push_back({monomial_at_col(row.cols[k]), row.vals[k]});
    return Poly::from_sorted_terms(ring_, std::move(terms));
  }

 private:
  const Ring& ring_;
  std::unordered_map<Monomial, int, MonomialHash> ids_;
  std::vector<Monomial> monos_;
  std::vector<int> queue_;
  std::unordered_map<int, RowSpec> pivot_spec_;
  std::vector<int> order_;
  std::vector<std::uint32_t> col_of_;
};

// Reduces `row` against the pivot rows; with keep_lead the leading entry is
// left alone (the row is itself the pivot of that column).
SparseRow reduce_row(const PrimeField& f, const SparseRow& row, const std::vector<std::optional<SparseRow>>& pivots,
                     int ncols, bool keep_lead) {
  DenseAccumulator acc(f, ncols);
  for (std::size_t k = 0; k < row.cols.size(); ++k) acc.data()[row.cols[k]] = row.vals[k];
  int start = row.cols.empty() ? ncols : static_cast<int>(row.cols[0]) + (keep_lead ? 1 : 0);
  for (int j = start; j < ncols; ++j) {
    if (!pivots[j]) continue;
    Coeff v = acc.value(j);
    if (!v) continue;
    const SparseRow& p = *pivots[j];
    acc.axpy(f.neg(v), p.cols, p.vals);
  }
  acc.reduce_all();
  SparseRow out;
  for (int j = 0; j < ncols; ++j)
    if (acc.data()[j]) {
      out.cols.push_back(static_cast<std::uint32_t>(j));
      out.vals.push_back(static_cast<Coeff>(acc.data()[j]));
    }
  return out;
}

void make_monic(const PrimeField& f, SparseRow& r) {
  Coeff inv = f.inv(r.vals[0]);
  for (auto& v : r.vals) v = f.mul(v, inv);
}

class F4 {
 public:
  F4(const Ring& ring, GroebnerOptions opt) : ring_(ring), opt_(opt) {}

  GroebnerBasis run(std::span<const Poly> gens) {
    GroebnerBasis out{ring_, {}, std::nullopt};
    std::map<int, std::vector<Poly>> inputs;
    for (const auto& g : gens) {
      if (!(g.ring() == ring_)) throw Error(Errc::ring_mismatch, "generator from a different ring");
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw Error(Errc::invalid_argument, "groebner_basis needs homogeneous generators");
      if (g.is_constant()) {
        out.elements.push_back(Poly::constant(ring_, 1));
        return out;
      }
      inputs[ring_.order.degree(g.leading_monomial())].push_back(g.monic());
    }
    for (;;) {
      int d = INT32_MAX;
      for (const auto& p : pairs_) d = std::min(d, p.degree);
      if (!inputs.empty()) d = std::min(d, inputs.begin()->first);
      if (d == INT32_MAX) break;
      if (opt_.max_degree >= 0 && d > opt_.max_degree) {
        out.truncated_at = opt_.max_degree;
        break;
      }
      std::vector<Pair> selected;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.degree == d ? selected : rest).push_back(p);
      pairs_ = std::move(rest);
      std::vector<Poly> fresh;
      if (auto it = inputs.find(d); it != inputs.end()) {
        fresh = std::move(it->second);
        inputs.erase(it);
      }
      std::vector<Poly> found = step(selected, fresh);
      for (auto& h : found) {
        if (h.is_constant()) {
          out.elements = {Poly::constant(ring_, 1)};
          return out;
        }
        update(std::move(h));
      }
    }
    std::vector<Poly> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.push_back(basis_[k]);
    out.elements = interreduce(minimal);
    return out;
  }

  // Fully reduces tails of a minimal basis (leading monomials pairwise
  // non-divisible); returns elements sorted by increasing leading monomial.
  std::vector<Poly> interreduce(std::vector<Poly> g) const {
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
      return ring_.order.greater(b.leading_monomial(), a.leading_monomial());
    });
    std::vector<Poly> done;
    std::size_t k = 0;
    while (k < g.size()) {
      int d = ring_.order.degree(g[k].leading_monomial());
      std::size_t e = k;
      while (e < g.size() && ring_.order.degree(g[e].leading_monomial()) == d) ++e;
      SymbolicMatrix sm(ring_);
      std::unordered_map<Monomial, const Poly*, MonomialHash> own;
      for (std::size_t t = k; t < e; ++t) {
        own.emplace(g[t].leading_monomial(), &g[t]);
        sm.add_monomials({&g[t], Monomial()});
      }
      sm.close([&](const Monomial& m) -> std::optional<RowSpec> {
        if (auto it = own.find(m); it != own.end()) return RowSpec{it->second, Monomial()};
        const Poly* best = nullptr;
        for (const auto& r : done)
          if (r.leading_monomial().divides(m) && (!best || r.size() < best->size())) best = &r;
        if (!best) return std::nullopt;
        return RowSpec{best, m / best->leading_monomial()};
      });
      sm.finalize();
      auto pivots = sm.pivot_rows();
      std::vector<Poly> reduced(e - k);
      parallel_for(e - k, [&](std::size_t t) {
        SparseRow row = sm.make_row({&g[k + t], Monomial()});
        SparseRow r = reduce_row(ring_.field, row, pivots, sm.ncols(), true);
        reduced[t] = sm.row_to_poly(r);
      });
      for (auto& r : reduced) done.push_back(std::move(r));
      k = e;
    }
    return done;
  }

 private:
  const Ring& ring_;
  GroebnerOptions opt_;
  std::vector<Poly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;

  const Monomial& lm(int i) const { return basis_[i].leading_monomial(); }

  std::optional<RowSpec> find_reducer(const Monomial& m) const {
    int best = -1;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k] || !lm(static_cast<int>(k)).divides(m)) continue;
      if (best < 0 || basis_[k].size() < basis_[best].size()) best = static_cast<int>(k);
    }
    if (best < 0) return std::nullopt;
    return RowSpec{&basis_[best], m / lm(best)};
  }

  std::vector<Poly> step(const std::vector<Pair>& selected, const std::vector<Poly>& fresh) {
    SymbolicMatrix sm(ring_);
    // rows to reduce, deduplicated by (generator, multiplier)
    std::vector<RowSpec> todo;
    std::map<std::pair<const Poly*, std::pair<std::uint64_t, std::uint64_t>>, bool> seen;
    auto add = [&](const Poly* p, const Monomial& u) {
      auto key = std::make_pair(p, std::make_pair(u.word(0), u.word(1)));
      if (seen.emplace(key, true).second) todo.push_back({p, u});
    };
    for (const auto& pr : selected) {
      add(&basis_[pr.i], pr.lcm / lm(pr.i));
      add(&basis_[pr.j], pr.lcm / lm(pr.j));
    }
    for (const auto& f : fresh) add(&f, Monomial());
    for (const auto& r : todo) sm.add_monomials(r);
    std::vector<std::pair<const Poly*, std::pair<std::uint64_t, std::uint64_t>>> used_as_pivot;
    sm.close([&](const Monomial& m) -> std::optional<RowSpec> {
      auto r = find_reducer(m);
      if (r) used_as_pivot.push_back({r->poly, {r->mult.word(0), r->mult.word(1)}});
      return r;
    });
    sm.finalize();
    for (const auto& key : used_as_pivot) seen[key] = false;
    std::vector<RowSpec> reduce;
    for (const auto& r : todo)
      if (seen[{r.poly, {r.mult.word(0), r.mult.word(1)}}]) reduce.push_back(r);
    auto pivots = sm.pivot_rows();
    const int ncols = sm.ncols();
    std::vector<SparseRow> residues(reduce.size());
    parallel_for(reduce.size(), [&](std::size_t t) {
      residues[t] = reduce_row(ring_.field, sm.make_row(reduce[t]), pivots, ncols, false);
    });
    // echelon form among the residues
    std::vector<std::optional<SparseRow>> fresh_pivots(ncols);
    std::vector<SparseRow> found;
    for (auto& r : residues) {
      if (r.cols.empty()) continue;
      SparseRow x = reduce_row(ring_.field, r, fresh_pivots, ncols, false);
      if (x.cols.empty()) continue;
      make_monic(ring_.field, x);
      fresh_pivots[x.cols[0]] = x;
      found.push_back(std::move(x));
    }
    std::vector<Poly> out;
    out.reserve(found.size());
    for (const auto& r : found) out.push_back(sm.row_to_poly(r));
    return out;
  }

  // Gebauer-Moeller installation of a new element.
  void update(Poly h) {
    const int hi = static_cast<int>(basis_.size());
    basis_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = lm(hi);
    std::vector<Pair> c;
    for (int k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      Monomial l = Monomial::lcm(lh, lm(k));
      c.push_back({k, hi, l, ring_.order.degree(l)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = Monomial::coprime(lh, lm(p.i));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && Monomial::lcm(lm(p.i), lh) != p.lcm && Monomial::lcm(lh, lm(p.j)) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (const auto& p : d)
      if (!Monomial::coprime(lh, lm(p.i))) kept.push_back(p);
    pairs_ = std::move(kept);
    for (int k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(lm(k))) active_[k] = false;
  }
};

}  // namespace

GroebnerBasis groebner_basis(const Ring& ring, std::span<const Poly> gens, GroebnerOptions opt) {
  F4 engine(ring, opt);
  return engine.run(gens);
}

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
  if (!(f.ring() == g.ring)) throw Error(Errc::ring_mismatch, "normal form across rings");
  const Ring& ring = g.ring;
  const PrimeField& fld = ring.field;
  std::vector<Term> p(f.terms().begin(), f.terms().end());
  std::vector<Term> out;
  std::size_t start = 0;
  std::vector<Term> merged;
  while (start < p.size()) {
    const Term lt = p[start];
    const Poly* red = nullptr;
    for (const auto& e : g.elements)
      if (e.leading_monomial().divides(lt.m)) {
        red = &e;
        break;
      }
    if (!red) {
      out.push_back(lt);
      ++start;
      continue;
    }
    Monomial u = lt.m / red->leading_monomial();
    Coeff c = fld.neg(fld.mul(lt.c, fld.inv(red->leading_coeff())));
    merged.clear();
    std::size_t i = start, j = 0;
    const auto& rt = red->terms();
    while (i < p.size() && j < rt.size()) {
      Monomial m = rt[j].m * u;
      int cmp = ring.order.compare(p[i].m, m);
      if (cmp > 0) {
        merged.push_back(p[i++]);
      } else if (cmp < 0) {
        merged.push_back({m, fld.mul(rt[j++].c, c)});
      } else {
        Coeff s = fld.add(p[i].c, fld.mul(rt[j].c, c));
        if (s) merged.push_back({m, s});
        ++i;
        ++j;
      }
    }
    for (; i < p.size(); ++i) merged.push_back(p[i]);
    for (; j < rt.size(); ++j) merged.push_back({rt[j].m * u, fld.mul(rt[j].c, c)});
    p.swap(merged);
    start = 0;
  }
  return Poly::from_sorted_terms(ring, std::move(out));
}

}  // namespace pfaffcy
