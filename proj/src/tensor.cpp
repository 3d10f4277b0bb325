#include <algorithm>

#include "pfaffcy/construct.hpp"

namespace pfaffcy {

SideShape shape_of(Side s) { return s == Side::cy ? SideShape{3, 7, 16} : SideShape{3, 6, 14}; }

namespace {

struct KindName {
  GraphKind kind;
  const char* name;
};
constexpr KindName kKindNames[] = {
    {GraphKind::linear, "linear"},
    {GraphKind::veronese2, "veronese2"},
    {GraphKind::cubic_basepoint, "cubic_basepoint"},
    {GraphKind::dp_linear, "dp_linear"},
    {GraphKind::dp_veronese2, "dp_veronese2"},
    {GraphKind::projection, "projection"},
    {GraphKind::m7, "m7"},
    {GraphKind::m10, "m10"},
    {GraphKind::k11_type2, "k11_type2"},
    {GraphKind::skew_k9, "skew_k9"},
    {GraphKind::generic, "generic"},
    {GraphKind::extended, "extended"},
    {GraphKind::restricted, "restricted"},
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr int kAttempts = 32;

Rng attempt_rng(std::uint64_t seed, std::uint64_t salt, int attempt) { return Rng(mix(mix(seed, salt), attempt)); }

std::vector<Coeff> random_vector(const PrimeField& f, int n, Rng& rng) {
  std::vector<Coeff> v(n);
  for (auto& c : v) c = rng.element(f);
  return v;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), 0, std::max(a.cols(), b.cols()));
  for (int i = 0; i < a.rows(); ++i) out.append_row(a.row(i));
  for (int i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

// Coefficient matrix (rows: forms, columns: monomials of degree d) rank.
int form_rank(const std::vector<Poly>& forms, int d) {
  const Ring& ring = forms.front().ring();
  auto monos = monomials_of_degree(ring, d);
  auto idx = index_of(monos);
  Matrix m(ring.field, static_cast<int>(forms.size()), static_cast<int>(monos.size()));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& t : forms[i].terms()) m(static_cast<int>(i), idx.at(t.m)) = t.c;
  return rank(m);
}

// Basis of the forms of degree d vanishing at the given points.
std::vector<Poly> forms_through(const Ring& ring, int d, const std::vector<std::vector<Coeff>>& points) {
  auto monos = monomials_of_degree(ring, d);
  Matrix ev(ring.field, static_cast<int>(points.size()), static_cast<int>(monos.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = 0; k < monos.size(); ++k)
      ev(static_cast<int>(i), static_cast<int>(k)) = Poly::monomial(ring, monos[k]).evaluate(points[i]);
  std::vector<Poly> out;
  for (const auto& v : rref_kernel(ev).basis) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (v[k]) terms.push_back({monos[k], v[k]});
    out.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  return out;
}

Poly random_combination(const std::vector<Poly>& basis, Rng& rng) {
  Poly f(basis.front().ring());
  for (const auto& b : basis) f += b.scaled(rng.element(f.ring().field));
  return f;
}

std::vector<Coeff> random_point(const PrimeField& f, int n, Rng& rng) {
  for (;;) {
    auto p = random_vector(f, n, rng);
    if (std::any_of(p.begin(), p.end(), [](Coeff c) { return c != 0; })) return p;
  }
}

bool is_bundle(const TensorSubspace& s) {
  try {
    matrix_on_pn(s, true);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_a_bundle) return false;
    throw;
  }
}

}  // namespace

std::string to_string(GraphKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

GraphKind graph_kind_from_string(const std::string& s) {
  for (const auto& kn : kKindNames)
    if (s == kn.name) return kn.kind;
  throw Error(Errc::invalid_argument, "unknown graph kind '" + s + "'");
}

std::string to_string(BundleType b) {
  switch (b) {
    case BundleType::tangent_twist: return "T(1)";
    case BundleType::o2_o3: return "O(2)+O(3)";
    case BundleType::o1_o4: return "O(1)+O(4)";
  }
  return "?";
}

BundleType bundle_type_from_string(const std::string& s) {
  if (s == "T(1)" || s == "tangent") return BundleType::tangent_twist;
  if (s == "O(2)+O(3)" || s == "o2o3") return BundleType::o2_o3;
  if (s == "O(1)+O(4)" || s == "o1o4") return BundleType::o1_o4;
  throw Error(Errc::invalid_argument, "unknown bundle type '" + s + "'");
}

int expected_fiber_count(GraphKind kind) {
  switch (kind) {
    case GraphKind::linear: return 11;
    case GraphKind::veronese2: return 9;
    case GraphKind::cubic_basepoint: return 8;
    case GraphKind::dp_linear: return 7;
    case GraphKind::dp_veronese2: return 6;
    case GraphKind::m7: return 7;
    case GraphKind::m10: return 10;
    case GraphKind::k11_type2: return 11;
    case GraphKind::skew_k9: return 9;
    case GraphKind::generic: return 0;
    default: return -1;
  }
}

void TensorSubspace::check() const {
  SideShape sh = shape();
  const int n = sh.w_dim * sh.p_dim;
  if (basis.rows() != sh.sub_dim || basis.cols() != n) throw Error(Errc::inconsistent, "tensor subspace basis has the wrong shape");
  if (annihilator.rows() != sh.ann_dim() || annihilator.cols() != n)
    throw Error(Errc::inconsistent, "tensor subspace annihilator has the wrong shape");
  if (rank(basis) != sh.sub_dim) throw Error(Errc::inconsistent, "tensor subspace basis is dependent");
  Matrix pairing = basis * annihilator.transpose();
  for (int i = 0; i < pairing.rows(); ++i)
    for (int j = 0; j < pairing.cols(); ++j)
      if (pairing(i, j)) throw Error(Errc::inconsistent, "annihilator does not vanish on the subspace");
}

bool TensorSubspace::contains(std::span<const Coeff> tensor) const {
  std::vector<Coeff> v = annihilator.apply(tensor);
  return std::all_of(v.begin(), v.end(), [](Coeff c) { return c == 0; });
}

TensorSubspace subspace_from_span(Side side, const Matrix& spanning, GraphKind kind, std::uint64_t seed) {
  TensorSubspace s;
  s.side = side;
  s.field = spanning.field();
  s.kind = kind;
  s.seed = seed;
  s.basis = row_basis(spanning);
  const int n = spanning.cols();
  KernelResult k = rref_kernel(s.basis);
  s.annihilator = Matrix(s.field, static_cast<int>(k.basis.size()), n);
  for (std::size_t i = 0; i < k.basis.size(); ++i)
    std::copy(k.basis[i].begin(), k.basis[i].end(), s.annihilator.row(static_cast<int>(i)).begin());
  s.annihilator = row_basis(s.annihilator);
  return s;
}

TensorSubspace subspace_from_annihilator(Side side, const Matrix& annihilator, GraphKind kind, std::uint64_t seed) {
  KernelResult k = rref_kernel(annihilator);
  Matrix span(annihilator.field(), static_cast<int>(k.basis.size()), annihilator.cols());
  for (std::size_t i = 0; i < k.basis.size(); ++i)
    std::copy(k.basis[i].begin(), k.basis[i].end(), span.row(static_cast<int>(i)).begin());
  return subspace_from_span(side, span, kind, seed);
}

Matrix graph_span(const std::vector<Poly>& map, int p_dim) {
  if (static_cast<int>(map.size()) != p_dim) throw Error(Errc::invalid_argument, "graph map has the wrong number of components");
  const Ring& ring = map.front().ring();
  int e = -1;
  for (const auto& v : map)
    if (!v.is_zero()) e = v.degree();
  if (e < 0) throw Error(Errc::invalid_argument, "graph map is zero");
  auto monos = monomials_of_degree(ring, e + 1);
  auto idx = index_of(monos);
  const int w = ring.nvars;
  Matrix coeff(ring.field, static_cast<int>(monos.size()), w * p_dim);
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < p_dim; ++b)
      for (const auto& t : map[b].terms()) coeff(idx.at(t.m * Monomial::variable(a)), a * p_dim + b) = t.c;
  return row_basis(coeff);
}

PolyMat matrix_on_pn(const TensorSubspace& s, bool certify) {
  SideShape sh = s.shape();
  Ring ring(s.field, sh.p_dim);
  const int cols = s.basis.rows();
  PolyMat m(ring, std::vector<int>(sh.w_dim, -1), std::vector<int>(cols, 0));
  for (int a = 0; a < sh.w_dim; ++a)
    for (int j = 0; j < cols; ++j) {
      std::vector<Term> terms;
      for (int b = 0; b < sh.p_dim; ++b)
        if (Coeff c = s.basis(j, a * sh.p_dim + b)) terms.push_back({Monomial::variable(b), c});
      m.set(a, j, Poly::from_terms(ring, std::move(terms)));
    }
  if (certify) {
    Rng rng(mix(s.seed, 0x5u));
    for (int t = 0; t < 8; ++t)
      if (rank(m.evaluate(random_vector(s.field, sh.p_dim, rng))) < sh.w_dim)
        throw Error(Errc::not_a_bundle, "the presentation matrix drops rank at a random point");
    Ideal minors(ring, linear_reduce(minors_ideal(m, sh.w_dim)));
    if (!minors.empty_scheme()) throw Error(Errc::not_a_bundle, "the presentation matrix is not surjective everywhere");
  }
  return m;
}

PolyMat lambda_on_p2(const TensorSubspace& s) {
  SideShape sh = s.shape();
  Ring w3(s.field, sh.w_dim);
  const int cols = s.annihilator.rows();
  PolyMat lam(w3, std::vector<int>(sh.p_dim, 0), std::vector<int>(cols, 1));
  for (int b = 0; b < sh.p_dim; ++b)
    for (int j = 0; j < cols; ++j) {
      std::vector<Term> terms;
      for (int a = 0; a < sh.w_dim; ++a)
        if (Coeff c = s.annihilator(j, a * sh.p_dim + b)) terms.push_back({Monomial::variable(a), c});
      lam.set(b, j, Poly::from_terms(w3, std::move(terms)));
    }
  return lam;
}

Matrix annihilator_from_lambda(const PolyMat& lambda) {
  const int p = lambda.rows();
  const int w = lambda.ring().nvars;
  Matrix ann(lambda.ring().field, lambda.cols(), w * p);
  for (int b = 0; b < p; ++b)
    for (int j = 0; j < lambda.cols(); ++j)
      for (const auto& t : lambda.at(b, j).terms())
        for (int a = 0; a < w; ++a)
          if (t.m[a]) ann(j, a * p + b) = t.c;
  return ann;
}

FiberCount fiber_count(const PolyMat& lambda, Side side) {
  FiberCount out;
  const Ring& ring = lambda.ring();
  Ideal minors(ring, linear_reduce(minors_ideal(lambda, std::min(lambda.rows(), lambda.cols()))));
  out.degeneracy = saturate_irrelevant(minors);
  HilbertPolynomial hp = out.degeneracy.hilbert_polynomial();
  if (hp.proj_dim > 0) throw Error(Errc::positive_dimensional, "degeneracy locus of lambda is positive-dimensional");
  out.k = hp.proj_dim < 0 ? 0 : static_cast<int>(hp.degree);
  if (side == Side::cy) {
    out.label = out.k == 8 ? "T(1)" : out.k == 9 ? "O(2)+O(3)" : out.k == 11 ? "O(1)+O(4)" : "other";
  } else {
    out.label = out.k == 6 ? "O(2)+O(2)" : out.k == 7 ? "O(1)+O(3)" : "other";
  }
  return out;
}

TensorSubspace build_generic_subspace(Side side, std::uint64_t seed, const PrimeField& f) {
  SideShape sh = shape_of(side);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = attempt_rng(seed, 0x6E6u, attempt);
    Matrix span(f, 0, sh.w_dim * sh.p_dim);
    for (int i = 0; i < sh.sub_dim; ++i) span.append_row(random_vector(f, sh.w_dim * sh.p_dim, rng));
    TensorSubspace s = subspace_from_span(side, span, GraphKind::generic, seed);
    s.attempts = attempt + 1;
    if (s.basis.rows() == sh.sub_dim && is_bundle(s)) return s;
  }
  throw Error(Errc::degenerate_sample, "could not sample a generic subspace");
}

TensorSubspace build_graph_subspace(GraphKind kind, std::uint64_t seed, const PrimeField& f) {
  Side side;
  int degree, span_dim;
  switch (kind) {
    case GraphKind::linear: side = Side::cy, degree = 1, span_dim = 6; break;
    case GraphKind::veronese2: side = Side::cy, degree = 2, span_dim = 10; break;
    case GraphKind::cubic_basepoint: side = Side::cy, degree = 3, span_dim = 14; break;
    case GraphKind::dp_linear: side = Side::dp, degree = 1, span_dim = 6; break;
    case GraphKind::dp_veronese2: side = Side::dp, degree = 2, span_dim = 10; break;
    default: throw Error(Errc::invalid_argument, "not a graph kind: " + to_string(kind));
  }
  SideShape sh = shape_of(side);
  Ring w3(f, 3);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = attempt_rng(seed, static_cast<std::uint64_t>(kind) + 1, attempt);
    std::vector<Poly> forms;
    std::vector<Coeff> base;
    if (kind == GraphKind::cubic_basepoint) {
      base = random_point(f, 3, rng);
      forms = forms_through(w3, 3, {base});
    } else {
      for (const auto& m : monomials_of_degree(w3, degree)) forms.push_back(Poly::monomial(w3, m));
    }
    std::vector<Poly> map;
    for (int b = 0; b < sh.p_dim; ++b) map.push_back(random_combination(forms, rng));
    if (form_rank(map, degree) != std::min<int>(sh.p_dim, static_cast<int>(forms.size()))) continue;
    Matrix g = graph_span(map, sh.p_dim);
    if (g.rows() != span_dim) continue;
    Matrix span = g;
    for (int i = g.rows(); i < sh.sub_dim; ++i) span.append_row(random_vector(f, sh.w_dim * sh.p_dim, rng));
    TensorSubspace s = subspace_from_span(side, span, kind, seed);
    if (s.basis.rows() != sh.sub_dim) continue;
    s.graph_map = std::move(map);
    s.graph_span = std::move(g);
    s.attempts = attempt + 1;
    if (!is_bundle(s)) continue;
    if (kind == GraphKind::cubic_basepoint && rank(lambda_on_p2(s).evaluate(base)) < sh.ann_dim()) continue;
    return s;
  }
  throw Error(Errc::degenerate_sample, "could not sample a subspace containing a " + to_string(kind) + " graph");
}

namespace {

Matrix random_invertible(const PrimeField& f, int n, Rng& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.element(f);
    if (determinant(m)) return m;
  }
}

// R * lambda * C for constant matrices.
PolyMat transform(const PolyMat& lam, const Matrix& r, const Matrix& c) {
  const Ring& ring = lam.ring();
  PolyMat out(ring, std::vector<int>(r.rows(), lam.row_twists().front()), std::vector<int>(c.cols(), lam.col_twists().front()));
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) {
      Poly e(ring);
      for (int k = 0; k < lam.rows(); ++k) {
        if (!r(i, k)) continue;
        for (int l = 0; l < lam.cols(); ++l)
          if (c(l, j) && !lam.at(k, l).is_zero()) e += lam.at(k, l).scaled(ring.field.mul(r(i, k), c(l, j)));
      }
      out.set(i, j, std::move(e));
    }
  return out;
}

PolyMat special_lambda(GraphKind kind, Rng& rng, const PrimeField& f, bool& interpretation) {
  Ring w3(f, 3);
  const int p = 7, c = 5;
  PolyMat lam(w3, std::vector<int>(p, 0), std::vector<int>(c, 1));
  switch (kind) {
    case GraphKind::m10:
    case GraphKind::k11_type2: {
      // 5 + 2 rows, 4 + 1 columns, zero lower-left block
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) lam.set(i, j, random_form(w3, 1, rng));
      for (int i = 5; i < 7; ++i) lam.set(i, 4, random_form(w3, 1, rng));
      if (kind == GraphKind::m10)
        for (int i = 0; i < 5; ++i) lam.set(i, 4, random_form(w3, 1, rng));
      return transform(lam, random_invertible(f, p, rng), random_invertible(f, c, rng));
    }
    case GraphKind::m7: {
      // beta : 7O -> I_K(3) for a length-two scheme K, lambda in its kernel
      std::vector<std::vector<Coeff>> k2{random_point(f, 3, rng), random_point(f, 3, rng)};
      auto cubics = forms_through(w3, 3, k2);
      std::vector<Poly> beta;
      for (int b = 0; b < p; ++b) beta.push_back(random_combination(cubics, rng));
      auto lin = monomials_of_degree(w3, 1);
      auto quart = monomials_of_degree(w3, 4);
      auto idx = index_of(quart);
      Matrix sys(f, static_cast<int>(quart.size()), p * 3);
      for (int b = 0; b < p; ++b)
        for (int v = 0; v < 3; ++v)
          for (const auto& t : beta[b].terms()) {
            Coeff& e = sys(idx.at(t.m * lin[v]), b * 3 + v);
            e = f.add(e, t.c);
          }
      auto ker = rref_kernel(sys).basis;
      for (int j = 0; j < c; ++j) {
        std::vector<Coeff> col(p * 3, 0);
        for (const auto& kv : ker) {
          Coeff s = rng.element(f);
          for (int u = 0; u < p * 3; ++u) col[u] = f.add(col[u], f.mul(s, kv[u]));
        }
        for (int b = 0; b < p; ++b) {
          std::vector<Term> terms;
          for (int v = 0; v < 3; ++v)
            if (col[b * 3 + v]) terms.push_back({lin[v], col[b * 3 + v]});
          lam.set(b, j, Poly::from_terms(w3, std::move(terms)));
        }
      }
      return lam;
    }
    case GraphKind::skew_k9: {
      // theta: generic skew 7 x 7 linear matrix (the syzygy matrix of its
      // own 6 x 6 Pfaffians), composed with a general constant 7 x 5 map
      interpretation = true;
      PolyMat theta(w3, std::vector<int>(p, 0), std::vector<int>(p, 1));
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
          Poly e = random_form(w3, 1, rng);
          theta.set(j, i, -e);
          theta.set(i, j, std::move(e));
        }
      Matrix cm(f, p, c);
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < c; ++j) cm(i, j) = rng.element(f);
      return transform(theta, Matrix::identity(f, p), cm);
    }
    default: throw Error(Errc::invalid_argument, "not a special builder: " + to_string(kind));
  }
}

}  // namespace

TensorSubspace special_builder(GraphKind kind, std::uint64_t seed, const PrimeField& f) {
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = attempt_rng(seed, 0x100u + static_cast<std::uint64_t>(kind), attempt);
    bool interpretation = false;
    PolyMat lam = special_lambda(kind, rng, f, interpretation);
    Matrix ann = annihilator_from_lambda(lam);
    if (rank(ann) != ann.rows()) continue;
    TensorSubspace s = subspace_from_annihilator(Side::cy, ann, kind, seed);
    s.interpretation_dependent = interpretation;
    s.attempts = attempt + 1;
    if (!is_bundle(s)) continue;
    return s;
  }
  throw Error(Errc::degenerate_sample, "could not sample a " + to_string(kind) + " subspace");
}

TensorSubspace build_by_projection(BundleType type, std::uint64_t seed, const PrimeField& f) {
  Ring w3(f, 3);
  const int k = type == BundleType::tangent_twist ? 8 : type == BundleType::o2_o3 ? 9 : 11;
  // Rows spanning the dual fibre G_w^v inside H^0(G)^v, as polynomial
  // vectors in w.
  std::vector<std::vector<Poly>> rows;
  int m = 0;
  auto block_rows = [&](std::vector<int> degrees) {
    std::vector<int> offsets;
    for (int d : degrees) {
      offsets.push_back(m);
      m += static_cast<int>(monomial_count(3, d));
    }
    return offsets;
  };
  auto eval_row = [&](int offset, int d) {
    std::vector<Poly> r(m, Poly(w3));
    auto monos = monomials_of_degree(w3, d);
    for (std::size_t t = 0; t < monos.size(); ++t) r[offset + t] = Poly::monomial(w3, monos[t]);
    return r;
  };
  if (type == BundleType::tangent_twist) {
    // T(1) = 3O(2) / O(1): sections are triples of quadrics modulo the Euler
    // image; the fibre functionals are phi . (q(w)) with phi . w = 0.
    auto off = block_rows({2, 2, 2});
    std::vector<std::vector<Poly>> e;
    for (int a = 0; a < 3; ++a) e.push_back(eval_row(off[a], 2));
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
      std::vector<Poly> r(m, Poly(w3));
      for (int t = 0; t < m; ++t)
        r[t] = Poly::variable(w3, pr[1]) * e[pr[0]][t] - Poly::variable(w3, pr[0]) * e[pr[1]][t];
      rows.push_back(std::move(r));
    }
  } else {
    std::vector<int> degs = type == BundleType::o2_o3 ? std::vector<int>{2, 3} : std::vector<int>{1, 4};
    auto off = block_rows(degs);
    for (std::size_t t = 0; t < degs.size(); ++t) rows.push_back(eval_row(off[t], degs[t]));
  }
  const int p = 7;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = attempt_rng(seed, 0x200u + static_cast<std::uint64_t>(type), attempt);
    Matrix pts(f, 0, m);
    for (int i = 0; i < k; ++i) {
      auto w = random_point(f, 3, rng);
      std::vector<Coeff> u(m, 0);
      for (const auto& r : rows) {
        Coeff c = rng.element(f);
        for (int t = 0; t < m; ++t) u[t] = f.add(u[t], f.mul(c, r[t].evaluate(w)));
      }
      pts.append_row(u);
    }
    auto vanish = rref_kernel(pts).basis;
    if (static_cast<int>(vanish.size()) < p) continue;
    Matrix proj(f, p, m);
    for (int i = 0; i < p; ++i)
      for (const auto& v : vanish) {
        Coeff c = rng.element(f);
        for (int t = 0; t < m; ++t) proj(i, t) = f.add(proj(i, t), f.mul(c, v[t]));
      }
    Matrix span(f, 0, 3 * p);
    for (const auto& r : rows) {
      std::vector<Poly> image;
      for (int i = 0; i < p; ++i) {
        Poly s(w3);
        for (int t = 0; t < m; ++t)
          if (proj(i, t) && !r[t].is_zero()) s += r[t].scaled(proj(i, t));
        image.push_back(std::move(s));
      }
      if (std::all_of(image.begin(), image.end(), [](const Poly& q) { return q.is_zero(); })) continue;
      Matrix g = graph_span(image, p);
      span = stack(span, g);
    }
    TensorSubspace s = subspace_from_span(Side::cy, span, GraphKind::projection, seed);
    if (s.basis.rows() != shape_of(Side::cy).sub_dim) continue;
    s.attempts = attempt + 1;
    if (!is_bundle(s)) continue;
    return s;
  }
  throw Error(Errc::degenerate_sample, "projection construction did not give a 16-dimensional subspace");
}

TensorSubspace extend_dp_to_cy(const TensorSubspace& s, std::uint64_t seed) {
  if (s.side != Side::dp || s.graph_map.empty()) throw Error(Errc::invalid_argument, "extension needs a dP-side subspace built from a graph");
  const PrimeField& f = s.field;
  const int p6 = 6, p7 = 7;
  const int degree = s.graph_map.front().degree();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = attempt_rng(seed, 0x300u, attempt);
    std::vector<Poly> map = s.graph_map;
    map.push_back(random_form(map.front().ring(), degree, rng));
    Matrix g = graph_span(map, p7);
    // complement of the graph span inside s, lifted with a random last column
    EchelonBuilder ech(f, 3 * p6);
    for (int i = 0; i < s.graph_span.rows(); ++i) ech.insert(s.graph_span.row(i));
    Matrix span = g;
    for (int i = 0; i < s.basis.rows(); ++i) {
      if (!ech.insert(s.basis.row(i))) continue;
      std::vector<Coeff> t(3 * p7, 0);
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < p6; ++b) t[a * p7 + b] = s.basis(i, a * p6 + b);
        t[a * p7 + p6] = rng.element(f);
      }
      span.append_row(t);
    }
    for (int i = 0; i < 2; ++i) span.append_row(random_vector(f, 3 * p7, rng));
    TensorSubspace out = subspace_from_span(Side::cy, span, GraphKind::extended, seed);
    if (out.basis.rows() != shape_of(Side::cy).sub_dim) continue;
    out.graph_map = std::move(map);
    out.graph_span = std::move(g);
    out.attempts = attempt + 1;
    if (!is_bundle(out)) continue;
    return out;
  }
  throw Error(Errc::degenerate_sample, "could not extend the subspace");
}

TensorSubspace cy_to_dp(const TensorSubspace& s, std::uint64_t seed) {
  if (s.side != Side::cy || s.graph_map.empty()) throw Error(Errc::invalid_argument, "restriction needs a CY-side subspace built from a graph");
  const PrimeField& f = s.field;
  const int p6 = 6, p7 = 7;
  const Ring& w3 = s.graph_map.front().ring();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = attempt_rng(seed, 0x400u, attempt);
    Matrix sub = s.graph_span;
    while (sub.rows() < 14) {
      std::vector<Coeff> t(3 * p7, 0);
      for (int i = 0; i < s.basis.rows(); ++i) {
        Coeff c = rng.element(f);
        for (int u = 0; u < 3 * p7; ++u) t[u] = f.add(t[u], f.mul(c, s.basis(i, u)));
      }
      sub.append_row(t);
    }
    Matrix pi = random_full_rank(f, p7, p6, rng).transpose();
    Matrix image(f, sub.rows(), 3 * p6);
    for (int i = 0; i < sub.rows(); ++i)
      for (int a = 0; a < 3; ++a)
        for (int b2 = 0; b2 < p6; ++b2) {
          Coeff acc = 0;
          for (int b = 0; b < p7; ++b) acc = f.add(acc, f.mul(pi(b2, b), sub(i, a * p7 + b)));
          image(i, a * p6 + b2) = acc;
        }
    TensorSubspace out = subspace_from_span(Side::dp, image, GraphKind::restricted, seed);
    if (out.basis.rows() != shape_of(Side::dp).sub_dim) continue;
    for (int b2 = 0; b2 < p6; ++b2) {
      Poly v(w3);
      for (int b = 0; b < p7; ++b)
        if (pi(b2, b)) v += s.graph_map[b].scaled(pi(b2, b));
      out.graph_map.push_back(std::move(v));
    }
    out.graph_span = graph_span(out.graph_map, p6);
    out.attempts = attempt + 1;
    if (!is_bundle(out)) continue;
    return out;
  }
  throw Error(Errc::degenerate_sample, "could not restrict the subspace");
}

}  // namespace pfaffcy
