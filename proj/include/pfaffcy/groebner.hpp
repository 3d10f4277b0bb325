#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfaffcy/linalg.hpp"
#include "pfaffcy/poly.hpp"
#include "pfaffcy/rng.hpp"

namespace pfaffcy {

/// Reduced Groebner basis: monic, no leading monomial divides another, tails
/// fully reduced, sorted by increasing leading monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Poly> elements;
  /// When set, the basis is only complete up to this degree.
  std::optional<int> truncated_at;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

struct GroebnerOptions {
  /// Stop after processing this degree (-1: no bound).
  int max_degree = -1;
};

/// Homogeneous F4 with the Gebauer-Moeller criteria; the result does not
/// depend on the order of the generators.
GroebnerBasis groebner_basis(const Ring& ring, std::span<const Poly> gens, GroebnerOptions opt = {});

/// Full reduction of f modulo the basis.
Poly normal_form(const Poly& f, const GroebnerBasis& g);

/// Hilbert series of S/(monomials) written as numerator(t) / (1 - t)^nvars.
struct HilbertSeries {
  int nvars = 0;
  std::vector<std::int64_t> numerator;

  std::int64_t coefficient(int d) const;
};

HilbertSeries hilbert_series(int nvars, std::span<const Monomial> monomials);

/// Hilbert polynomial in the form hp(d) = sum_k q[k] * C(d - k + dim, dim).
struct HilbertPolynomial {
  int proj_dim = -1;
  std::int64_t degree = 0;
  std::vector<std::int64_t> q;

  std::int64_t operator()(std::int64_t d) const;
  /// Coefficients of hp as a polynomial in d (lowest first), as exact
  /// fractions numerators[i] / denominator.
  std::vector<std::int64_t> numerators() const;
  std::int64_t denominator() const;
  std::string to_string() const;
};

HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs);

/// Homogeneous ideal with cached Groebner basis and Hilbert series.
class Ideal {
 public:
  Ideal() = default;
  Ideal(const Ring& ring, std::vector<Poly> gens);

  static Ideal unit(const Ring& ring);
  static Ideal irrelevant(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  bool saturated() const noexcept { return saturated_; }
  void mark_saturated() { saturated_ = true; }

  const GroebnerBasis& groebner() const;
  const HilbertSeries& hilbert_series() const;
  HilbertPolynomial hilbert_polynomial() const;
  /// dim (S/I)_d from the leading-term ideal.
  std::int64_t hilbert_function(int d) const;
  bool contains(const Poly& f) const;
  /// True when the projective scheme is empty.
  bool empty_scheme() const { return hilbert_polynomial().proj_dim < 0; }
  /// Equality of ideals (compares reduced bases).
  bool same_as(const Ideal& o) const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Poly> gens_;
  bool saturated_ = false;
  std::shared_ptr<Cache> cache_;
};

/// dim (S/I)_d from the rank of the degree-d Macaulay matrix, without a basis.
std::int64_t hilbert_function_macaulay(const Ideal& i, int d);

/// Generators replaced, degree by degree, by a reduced echelon basis of
/// their span.
std::vector<Poly> linear_reduce(std::span<const Poly> polys);

/// Image of each polynomial under x_i -> sum_j a(i, j) y_j, where y are the
/// variables of `target` (a is nvars x target.nvars).
std::vector<Poly> substitute_linear(std::span<const Poly> polys, const Matrix& a, const Ring& target);

/// Homogeneous form of degree d with uniformly random coefficients.
Poly random_form(const Ring& ring, int d, Rng& rng);

/// Random matrix with full column rank (rows >= cols).
Matrix random_full_rank(const PrimeField& f, int rows, int cols, Rng& rng);

Ideal ideal_quotient(const Ideal& i, const Poly& f);

/// (I : x_last^inf) via the reverse-lexicographic division trick; the
/// result is returned as a Groebner basis of the quotient.
std::vector<Poly> saturate_last_variable(const Ideal& i);

/// (I : m^inf) for the irrelevant ideal m, by quotienting with a random
/// linear form (made the last coordinate) until stable.
Ideal saturate_irrelevant(const Ideal& i, std::uint64_t seed = 0);

/// Restriction to a random linear subspace of codimension `count`, as an
/// ideal in nvars - count variables. `param` receives the parametrisation.
Ideal random_slice(const Ideal& i, int count, Rng& rng, Matrix* param = nullptr);

/// Degree and projective dimension certified by slicing: the ideal is cut
/// by proj_dim random hyperplanes and the finite length read off; one more
/// hyperplane must give the empty scheme.
struct SliceCertificate {
  int proj_dim = -1;
  std::int64_t degree = 0;
  bool dimension_confirmed = false;
};
SliceCertificate certify_by_slicing(const Ideal& i, int proj_dim, Rng& rng);

enum class ProbeMode { points, slice, full };
std::string to_string(ProbeMode m);
ProbeMode probe_mode_from_string(const std::string& s);

struct ProbeReport {
  ProbeMode mode = ProbeMode::slice;
  enum class Outcome { smooth, singular, inconclusive } outcome = Outcome::inconclusive;
  int samples = 0;
  /// Projective dimension of the singular locus found (full mode), or -1.
  int singular_dim = -1;
  std::string detail;

  bool passed() const { return outcome == Outcome::smooth; }
  std::string outcome_string() const;
};

struct ProbeOptions {
  int points_wanted = 5;
  int slice_budget = 40;
  std::uint64_t seed = 0;
};

ProbeReport singular_probe(const Ideal& i, int expected_codim, ProbeMode mode, ProbeOptions opt = {});

/// F_p-rational points of a zero-dimensional scheme given by a homogeneous
/// ideal in generic coordinates (points with last coordinate 0 are missed).
std::vector<std::vector<Coeff>> rational_points(const Ideal& zero_dim);

}  // namespace pfaffcy
