#include "pfaffcy/modgeom.hpp"

#include <algorithm>

namespace pfaffcy {

Presentation Presentation::linear(const PolyMat& m) {
  PolyMat out(m.ring(), std::vector<int>(m.rows(), -1), std::vector<int>(m.cols(), 0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
  out.check();
  return {std::move(out)};
}

std::int64_t coker_hilbert(const Presentation& pr, int d) {
  const PolyMat& m = pr.map;
  const Ring& ring = m.ring();
  std::vector<int> offset;
  std::vector<MonomialIndex> index;
  int width = 0;
  for (int i = 0; i < m.rows(); ++i) {
    offset.push_back(width);
    auto monos = monomials_of_degree(ring, d - m.row_twists()[i]);
    index.push_back(index_of(monos));
    width += static_cast<int>(monos.size());
  }
  if (width == 0) return 0;
  EchelonBuilder ech(ring.field, width);
  std::vector<Coeff> row(width);
  for (int j = 0; j < m.cols(); ++j) {
    for (const auto& mu : monomials_of_degree(ring, d - m.col_twists()[j])) {
      std::fill(row.begin(), row.end(), 0);
      for (int i = 0; i < m.rows(); ++i)
        for (const auto& t : m.at(i, j).terms()) row[offset[i] + index[i].at(t.m * mu)] = t.c;
      ech.insert(row);
    }
  }
  return width - ech.rank();
}

Matrix hyperplane_chart(const Poly& h) {
  const Ring& ring = h.ring();
  if (h.is_zero() || h.degree() != 1 || !h.is_homogeneous()) throw Error(Errc::invalid_argument, "hyperplane needs a nonzero linear form");
  Matrix row(ring.field, 1, ring.nvars);
  for (const auto& t : h.terms())
    for (int v = 0; v < ring.nvars; ++v)
      if (t.m[v]) row(0, v) = t.c;
  KernelResult k = rref_kernel(row);
  Matrix chart(ring.field, ring.nvars, ring.nvars - 1);
  for (int c = 0; c < ring.nvars - 1; ++c)
    for (int v = 0; v < ring.nvars; ++v) chart(v, c) = k.basis[c][v];
  return chart;
}

Presentation restrict_hyperplane(const Presentation& pr, const Poly& h) {
  const PolyMat& m = pr.map;
  Matrix chart = hyperplane_chart(h);
  Ring target(m.ring().field, m.ring().nvars - 1);
  PolyMat out(target, m.row_twists(), m.col_twists());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::vector<Poly> one{m.at(i, j)};
      out.set(i, j, substitute_linear(one, chart, target).front());
    }
  return {std::move(out)};
}

Ideal restrict_ideal(const Ideal& i, const Poly& h) {
  Matrix chart = hyperplane_chart(h);
  Ring target(i.ring().field, i.ring().nvars - 1);
  return Ideal(target, linear_reduce(substitute_linear(i.generators(), chart, target)));
}

std::vector<std::int64_t> hr_function(const Ideal& i_sat, const HilbertPolynomial& hp, int from, int to) {
  std::vector<std::int64_t> h0;
  for (int j = from; j <= to; ++j) h0.push_back(hp(j));
  return hr_function_from_sections(i_sat, h0, from);
}

std::vector<std::int64_t> hr_function_from_sections(const Ideal& i_sat, const std::vector<std::int64_t>& h0, int from) {
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < h0.size(); ++k) {
    const int j = from + static_cast<int>(k);
    std::int64_t v = h0[k] - i_sat.hilbert_function(j);
    if (v < 0)
      throw Error(Errc::inconsistent, "negative h^1(I(" + std::to_string(j) + ")): vanishing assumption or Hilbert polynomial wrong");
    out.push_back(v);
  }
  return out;
}

bool maximal_rank_check(const Ideal& i_sat, const HilbertPolynomial& hp, int from, int to) {
  const int n = i_sat.ring().nvars;
  for (int j = from; j <= to; ++j) {
    const std::int64_t forms = monomial_count(n, j);
    const std::int64_t in_ideal = forms - i_sat.hilbert_function(j);
    if (in_ideal != std::max<std::int64_t>(0, forms - hp(j))) return false;
  }
  return true;
}

BundleKernelSpec BundleKernelSpec::direct_sum(const Ring& ring, std::vector<int> twists) {
  BundleKernelSpec s;
  s.ring = ring;
  std::vector<int> cols;
  for (int t : twists) cols.push_back(-t);
  s.constraint = PolyMat(ring, std::vector<int>{}, std::move(cols));
  s.twists = std::move(twists);
  if (s.rank() % 2 == 0) throw Error(Errc::invalid_argument, "bundle rank must be odd");
  return s;
}

BundleKernelSpec BundleKernelSpec::kernel(const PolyMat& constraint) {
  BundleKernelSpec s;
  s.ring = constraint.ring();
  for (int t : constraint.col_twists()) s.twists.push_back(-t);
  for (int t : constraint.row_twists())
    if (t != -1) throw Error(Errc::invalid_argument, "constraint must map onto a sum of O(1)");
  s.constraint = constraint;
  s.constraint.check();
  if (s.rank() % 2 == 0 || s.rank() <= 0) throw Error(Errc::invalid_argument, "bundle rank must be odd and positive");
  return s;
}

namespace {

// Unknown layout for a graded matrix X with entries of degree
// row_deg[i] - col_deg[j] (negative degree: entry forced to zero).
struct GradedUnknowns {
  std::vector<int> offset;  // per entry
  std::vector<std::vector<Monomial>> monos;
  int count = 0;

  GradedUnknowns(const Ring& ring, int rows, int cols, auto degree) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        offset.push_back(count);
        monos.push_back(monomials_of_degree(ring, degree(i, j)));
        count += static_cast<int>(monos.back().size());
      }
  }
};

}  // namespace

std::int64_t end_dimension(const BundleKernelSpec& spec, std::uint64_t seed) {
  const Ring& ring = spec.ring;
  const int n = spec.cover_rank();
  const int q = spec.constraint_rows();
  const auto& d = spec.twists;
  if (q == 0) {
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) total += monomial_count(ring.nvars, d[i] - d[j]);
    return total;
  }
  const PolyMat& m = spec.constraint;
  // B : F0 -> F0 with B(i, j) of degree d_i - d_j; C : qO(1) -> qO(1) constant.
  GradedUnknowns b(ring, n, n, [&](int i, int j) { return d[i] - d[j]; });
  const int cols = b.count + q * q;
  // equations (M B - C M)(r, j), of degree 1 - d_j
  std::vector<int> eq_offset;
  std::vector<MonomialIndex> eq_index;
  int rows = 0;
  for (int r = 0; r < q; ++r)
    for (int j = 0; j < n; ++j) {
      eq_offset.push_back(rows);
      auto monos = monomials_of_degree(ring, 1 - d[j]);
      eq_index.push_back(index_of(monos));
      rows += static_cast<int>(monos.size());
    }
  const PrimeField& f = ring.field;
  Matrix sys(f, rows, cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int e = i * n + j;
      for (std::size_t k = 0; k < b.monos[e].size(); ++k) {
        const int u = b.offset[e] + static_cast<int>(k);
        for (int r = 0; r < q; ++r)
          for (const auto& t : m.at(r, i).terms()) {
            const int row = eq_offset[r * n + j] + eq_index[r * n + j].at(t.m * b.monos[e][k]);
            sys(row, u) = f.add(sys(row, u), t.c);
          }
      }
    }
  for (int r = 0; r < q; ++r)
    for (int s = 0; s < q; ++s) {
      const int u = b.count + r * q + s;
      for (int j = 0; j < n; ++j)
        for (const auto& t : m.at(s, j).terms()) {
          const int row = eq_offset[r * n + j] + eq_index[r * n + j].at(t.m);
          sys(row, u) = f.sub(sys(row, u), t.c);
        }
    }
  KernelResult sol = rref_kernel(sys);
  // pairs inducing zero on E: B kills the kernel frame of M at random points
  Rng rng(seed ^ 0xE4Du);
  Matrix cond(f, 0, static_cast<int>(sol.basis.size()));
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Coeff> x(ring.nvars);
    for (auto& c : x) c = rng.element(f);
    KernelResult frame = rref_kernel(m.evaluate(x));
    for (const auto& v : frame.basis) {
      // (B(x) v)_i for every solution vector
      for (int i = 0; i < n; ++i) {
        std::vector<Coeff> row(sol.basis.size(), 0);
        for (std::size_t s = 0; s < sol.basis.size(); ++s) {
          Coeff acc = 0;
          for (int j = 0; j < n; ++j) {
            if (!v[j]) continue;
            const int e = i * n + j;
            Coeff entry = 0;
            for (std::size_t k = 0; k < b.monos[e].size(); ++k) {
              Coeff coef = sol.basis[s][b.offset[e] + k];
              if (!coef) continue;
              Coeff mv = 1;
              for (int var = 0; var < ring.nvars; ++var) mv = f.mul(mv, f.pow(x[var], b.monos[e][k][var]));
              entry = f.add(entry, f.mul(coef, mv));
            }
            acc = f.add(acc, f.mul(entry, v[j]));
          }
          row[s] = acc;
        }
        cond.append_row(row);
      }
    }
  }
  const std::int64_t inducing_zero = cond.rows() ? static_cast<std::int64_t>(rref_kernel(cond).basis.size()) : static_cast<std::int64_t>(sol.basis.size());
  return static_cast<std::int64_t>(sol.basis.size()) - inducing_zero;
}

}  // namespace pfaffcy
