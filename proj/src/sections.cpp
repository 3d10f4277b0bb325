#include <algorithm>

#include "pfaffcy/construct.hpp"

namespace pfaffcy {

SectionSpace::SectionSpace(const BundleKernelSpec& spec) : spec_(spec) {
  const Ring& ring = spec.ring;
  const int n = spec.cover_rank();
  const int q = spec.constraint_rows();
  const auto& d = spec.twists;
  // unknowns: a_ij, i < j, of degree 1 + d_i + d_j
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      offset_.push_back(unknowns_);
      monos_.push_back(monomials_of_degree(ring, 1 + d[i] + d[j]));
      unknowns_ += static_cast<int>(monos_.back().size());
    }
  if (q == 0) {
    for (int u = 0; u < unknowns_; ++u) {
      std::vector<Coeff> e(unknowns_, 0);
      e[u] = 1;
      basis_.push_back(std::move(e));
    }
    return;
  }
  // equations: (M A)(r, j), of degree 2 + d_j
  std::vector<int> eq_offset;
  std::vector<MonomialIndex> eq_index;
  for (int r = 0; r < q; ++r)
    for (int j = 0; j < n; ++j) {
      eq_offset.push_back(equations_);
      auto monos = monomials_of_degree(ring, 2 + d[j]);
      eq_index.push_back(index_of(monos));
      equations_ += static_cast<int>(monos.size());
    }
  const PrimeField& f = ring.field;
  const PolyMat& m = spec.constraint;
  Matrix sys(f, equations_, unknowns_);
  auto add = [&](int r, int col, const Poly& entry, const Monomial& mu, int u, bool negate) {
    for (const auto& t : entry.terms()) {
      const int row = eq_offset[r * n + col] + eq_index[r * n + col].at(t.m * mu);
      sys(row, u) = negate ? f.sub(sys(row, u), t.c) : f.add(sys(row, u), t.c);
    }
  };
  int pair = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pair)
      for (std::size_t k = 0; k < monos_[pair].size(); ++k) {
        const int u = offset_[pair] + static_cast<int>(k);
        for (int r = 0; r < q; ++r) {
          // a_ij = mu at (i, j) and -mu at (j, i)
          add(r, j, m.at(r, i), monos_[pair][k], u, false);
          add(r, i, m.at(r, j), monos_[pair][k], u, true);
        }
      }
  basis_ = rref_kernel(sys).basis;
}

SkewSection SectionSpace::element(std::span<const Coeff> coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw Error(Errc::invalid_argument, "section coordinates have the wrong length");
  const Ring& ring = spec_.ring;
  const PrimeField& f = ring.field;
  const int n = spec_.cover_rank();
  std::vector<Coeff> flat(unknowns_, 0);
  for (int b = 0; b < dim(); ++b) {
    if (!coords[b]) continue;
    for (int u = 0; u < unknowns_; ++u)
      if (basis_[b][u]) flat[u] = f.add(flat[u], f.mul(coords[b], basis_[b][u]));
  }
  std::vector<int> rows, cols;
  for (int t : spec_.twists) {
    rows.push_back(-t);
    cols.push_back(t + 1);
  }
  SkewSection s{PolyMat(ring, rows, cols, true), std::vector<Coeff>(coords.begin(), coords.end())};
  int pair = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pair) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < monos_[pair].size(); ++k)
        if (Coeff c = flat[offset_[pair] + k]) terms.push_back({monos_[pair][k], c});
      s.a.set(i, j, Poly::from_terms(ring, std::move(terms)));
    }
  return s;
}

SkewSection SectionSpace::basis_element(int i) const {
  std::vector<Coeff> e(dim(), 0);
  e.at(i) = 1;
  return element(e);
}

SkewSection random_section(const SectionSpace& space, std::uint64_t seed) {
  if (space.dim() == 0) throw Error(Errc::invalid_argument, "the section space is zero");
  Rng rng(seed ^ 0x5EC7u);
  const PrimeField& f = space.spec().ring.field;
  std::vector<Coeff> c(space.dim());
  for (auto& x : c) x = rng.element(f);
  return space.element(c);
}

PfaffianLocus pfaffian_locus(const SkewSection& a, const BundleKernelSpec& spec, std::uint64_t seed) {
  const Ring& ring = spec.ring;
  const int n = spec.cover_rank();
  PfaffianLocus out;
  out.r = spec.r();
  Rng rng(seed ^ 0x9FAFu);
  for (int t = 0; t < 2; ++t) {
    std::vector<Coeff> x(ring.nvars);
    for (auto& c : x) c = rng.element(ring.field);
    out.generic_rank = std::max(out.generic_rank, rank(a.a.evaluate(x)));
  }
  if (out.generic_rank != 2 * out.r)
    throw Error(Errc::wrong_generic_rank,
                "section has generic rank " + std::to_string(out.generic_rank) + ", expected " + std::to_string(2 * out.r));
  auto supports = subsets(n, 2 * out.r);
  auto pf = principal_pfaffians(a.a, 2 * out.r);
  out.pfaffians = pf.size();
  for (std::size_t s = 0; s < pf.size(); ++s) {
    if (pf[s].is_zero()) continue;
    int expected = out.r;
    for (int i : supports[s]) expected += spec.twists[i];
    if (pf[s].homogeneous_degree() != expected)
      throw Error(Errc::inconsistent, "pfaffian degree disagrees with the twist formula");
  }
  auto gens = linear_reduce(pf);
  out.independent = gens.size();
  out.ideal = saturate_irrelevant(Ideal(ring, std::move(gens)), seed);
  out.hp = out.ideal.hilbert_polynomial();
  if (out.hp.proj_dim != ring.nvars - 1 - 3)
    throw Error(Errc::codimension, "pfaffian locus has projective dimension " + std::to_string(out.hp.proj_dim) + ", not codimension 3");
  return out;
}

namespace {

struct RowName {
  TableRow row;
  const char* name;
  int degree;
};
constexpr RowName kRows[] = {
    {TableRow::dp3, "dp3", 3},   {TableRow::dp4, "dp4", 4},   {TableRow::dp5, "dp5", 5},
    {TableRow::dp6, "dp6", 6},   {TableRow::dp7, "dp7", 7},   {TableRow::cy12, "cy12", 12},
    {TableRow::cy13, "cy13", 13}, {TableRow::cy14, "cy14", 14}, {TableRow::cy15, "cy15", 15},
    {TableRow::cy16, "cy16", 16},
};

// Constraint F0 = sum twists -> O(1) given by a row of forms.
BundleKernelSpec euler_kernel(const Ring& ring, int extra) {
  const int n = ring.nvars + extra;
  PolyMat m(ring, std::vector<int>{-1}, std::vector<int>(n, 0));
  for (int v = 0; v < ring.nvars; ++v) m.set(0, v, Poly::variable(ring, v));
  return BundleKernelSpec::kernel(m);
}

BundleKernelSpec generic_kernel(const Ring& ring, int rows, int cols, std::uint64_t seed) {
  Rng rng(seed ^ 0xC0457u);
  for (;;) {
    PolyMat m(ring, std::vector<int>(rows, -1), std::vector<int>(cols, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, random_form(ring, 1, rng));
    // surjective everywhere iff the maximal minors cut out the empty set
    Ideal minors(ring, linear_reduce(minors_ideal(m, rows)));
    if (minors.empty_scheme()) return BundleKernelSpec::kernel(m);
  }
}

}  // namespace

std::string to_string(TableRow r) {
  for (const auto& rn : kRows)
    if (rn.row == r) return rn.name;
  return "?";
}

std::optional<TableRow> table_row_from_string(const std::string& s) {
  for (const auto& rn : kRows)
    if (s == rn.name) return rn.row;
  return std::nullopt;
}

int table_row_degree(TableRow row) {
  for (const auto& rn : kRows)
    if (rn.row == row) return rn.degree;
  return 0;
}

BundleKernelSpec table_row_spec(TableRow row, std::uint64_t seed, const PrimeField& f) {
  Ring p5(f, 6), p6(f, 7);
  switch (row) {
    case TableRow::dp3: return BundleKernelSpec::direct_sum(p5, {-1, 1, 1});
    case TableRow::dp4: return BundleKernelSpec::direct_sum(p5, {0, 0, 1});
    case TableRow::dp5: return BundleKernelSpec::direct_sum(p5, std::vector<int>(5, 0));
    case TableRow::dp6: return euler_kernel(p5, 2);
    case TableRow::dp7: return generic_kernel(p5, 2, 11, seed);
    case TableRow::cy12: return BundleKernelSpec::direct_sum(p6, {-1, 0, 0, 1, 1});
    case TableRow::cy13: return BundleKernelSpec::direct_sum(p6, {0, 0, 0, 0, 1});
    case TableRow::cy14: return BundleKernelSpec::direct_sum(p6, std::vector<int>(7, 0));
    case TableRow::cy15: return euler_kernel(p6, 3);
    case TableRow::cy16: return generic_kernel(p6, 2, 13, seed);
  }
  throw Error(Errc::invalid_argument, "unknown table row");
}

}  // namespace pfaffcy
