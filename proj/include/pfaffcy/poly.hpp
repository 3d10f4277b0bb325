#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pfaffcy/field.hpp"
#include "pfaffcy/monomial.hpp"

namespace pfaffcy {

/// Polynomial ring F_p[x0, ..., x(n-1)] with the graded reverse-lex order.
struct Ring {
  PrimeField field;
  int nvars = 0;
  MonomialOrder order;

  Ring() = default;
  Ring(PrimeField f, int n, MonomialOrder o = MonomialOrder()) : field(f), nvars(n), order(o) {
    if (n < 0 || n > kMaxVars) throw Error(Errc::invalid_argument, "variable count out of range");
  }
  Coeff prime() const noexcept { return field.prime(); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field == b.field && a.nvars == b.nvars && a.order == b.order;
  }
};

/// Number of monomials of degree d in n variables.
std::int64_t monomial_count(int nvars, int d);

/// All monomials of degree d in n variables, largest first.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d);

using MonomialIndex = std::unordered_map<Monomial, int, MonomialHash>;
MonomialIndex index_of(const std::vector<Monomial>& monos);

struct Term {
  Monomial m;
  Coeff c;
};

/// Sparse polynomial in canonical form: terms strictly decreasing in the ring
/// order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Ring& ring) : ring_(ring) {}

  static Poly constant(const Ring& ring, Coeff c);
  static Poly variable(const Ring& ring, int i);
  static Poly monomial(const Ring& ring, const Monomial& m, Coeff c = 1);
  /// Builds a polynomial from terms in any order; like terms are combined.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);
  /// Trusts that `terms` are already canonical.
  static Poly from_sorted_terms(const Ring& ring, std::vector<Term> terms);
  /// Parses expressions such as "3*x0^2*x1 - x2 + 5".
  static Poly parse(const Ring& ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().m; }
  Coeff leading_coeff() const { return terms_.front().c; }

  /// Total degree (ring-weighted); -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Degree when homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const noexcept;

  Coeff coefficient(const Monomial& m) const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(Coeff c) const;
  Poly times_term(const Monomial& m, Coeff c) const;
  /// this += c * m * g
  void add_multiple(const Poly& g, const Monomial& m, Coeff c);
  Poly monic() const;

  Coeff evaluate(std::span<const Coeff> point) const;
  /// Ring homomorphism x_i -> images[i]; all images share a target ring.
  Poly substitute(std::span<const Poly> images) const;
  Poly derivative(int var) const;
  /// Renames x_i -> x_{perm[i]} into a ring with the same prime.
  Poly permute_variables(const Ring& target, std::span<const int> perm) const;
  /// Reinterprets the polynomial in a ring with at least as many variables.
  Poly embed(const Ring& target) const;
  /// Exact division; throws Errc::invalid_argument when g does not divide.
  Poly divide_exact(const Poly& g) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  Ring ring_;
  std::vector<Term> terms_;

  void check_same_ring(const Poly& o) const;
};

std::string monomial_to_string(const Monomial& m, int nvars);

}  // namespace pfaffcy
