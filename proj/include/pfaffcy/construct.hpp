#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaffcy/groebner.hpp"
#include "pfaffcy/modgeom.hpp"
#include "pfaffcy/polymat.hpp"

namespace pfaffcy {

/// CY side: 16-dimensional subspaces of W3 (x) P7 over P^6; dP side:
/// 14-dimensional subspaces of W3 (x) P6 over P^5.
enum class Side { cy, dp };

struct SideShape {
  int w_dim = 3;
  int p_dim;
  int sub_dim;
  int ann_dim() const { return w_dim * p_dim - sub_dim; }
};
SideShape shape_of(Side s);

enum class GraphKind {
  linear,
  veronese2,
  cubic_basepoint,
  dp_linear,
  dp_veronese2,
  projection,
  m7,
  m10,
  k11_type2,
  skew_k9,
  generic,
  extended,
  restricted,
};
std::string to_string(GraphKind k);
GraphKind graph_kind_from_string(const std::string& s);

/// Rank-two bundles on P^2 whose projectivisations give the strata k = 8, 9, 11.
enum class BundleType { tangent_twist, o2_o3, o1_o4 };
std::string to_string(BundleType b);
BundleType bundle_type_from_string(const std::string& s);

/// A linear subspace L of W (x) P. Tensors are stored as flat vectors with
/// entry (a, b) at index a * p_dim + b; a tensor w (x) p contracts against a
/// point x of P(P) to the linear form w * sum_b p_b x_b. Both the basis and
/// the annihilator are kept in reduced echelon form, so two subspaces are
/// equal iff their bases are.
struct TensorSubspace {
  Side side = Side::cy;
  PrimeField field;
  Matrix basis;
  Matrix annihilator;
  GraphKind kind = GraphKind::generic;
  std::uint64_t seed = 0;
  int attempts = 1;
  /// The map P^2 -> P(P) whose graph the subspace contains, when known.
  std::vector<Poly> graph_map;
  /// Reduced echelon basis of the span of that graph.
  Matrix graph_span;
  /// Set when the construction follows a reading of an underdetermined recipe.
  bool interpretation_dependent = false;

  SideShape shape() const { return shape_of(side); }
  /// Throws unless basis and annihilator have the right sizes and pair to zero.
  void check() const;
  bool contains(std::span<const Coeff> tensor) const;
};

TensorSubspace subspace_from_span(Side side, const Matrix& spanning, GraphKind kind, std::uint64_t seed);
TensorSubspace subspace_from_annihilator(Side side, const Matrix& annihilator, GraphKind kind, std::uint64_t seed);

/// Reduced echelon basis of span{ w (x) v(w) : w in W } for a map given by
/// p_dim forms of a common degree in three variables.
Matrix graph_span(const std::vector<Poly>& map, int p_dim);

/// Random subspace (same seed, same result) containing the graph of a map
/// of the given kind.
TensorSubspace build_graph_subspace(GraphKind kind, std::uint64_t seed, const PrimeField& f = PrimeField(kDefaultPrime));
TensorSubspace build_generic_subspace(Side side, std::uint64_t seed, const PrimeField& f = PrimeField(kDefaultPrime));
TensorSubspace special_builder(GraphKind kind, std::uint64_t seed, const PrimeField& f = PrimeField(kDefaultPrime));
TensorSubspace build_by_projection(BundleType type, std::uint64_t seed, const PrimeField& f = PrimeField(kDefaultPrime));

/// The 3 x sub_dim matrix of linear forms on P(P) (the map psi of the
/// bundle E = ker psi). Throws Errc::not_a_bundle unless it is surjective
/// everywhere (certified by the 3 x 3 minors cutting out the empty set).
PolyMat matrix_on_pn(const TensorSubspace& s, bool certify = true);

/// The p_dim x ann_dim matrix of linear forms on P(W) = P^2 whose column j
/// at w is the contraction of annihilator element j with w; the fibre of
/// L cap Seg over w is the projectivised kernel of its transpose.
PolyMat lambda_on_p2(const TensorSubspace& s);

/// Tensor-space data recovered from a lambda matrix (inverse of lambda_on_p2).
Matrix annihilator_from_lambda(const PolyMat& lambda);

struct FiberCount {
  int k = 0;
  std::string label;
  Ideal degeneracy;
};
FiberCount fiber_count(const PolyMat& lambda, Side side);

/// A skew section of wedge^2 E(1), represented by the skew matrix on the
/// free cover; `coords` are its coordinates in the section-space basis.
struct SkewSection {
  PolyMat a;
  std::vector<Coeff> coords;
};

class SectionSpace {
 public:
  explicit SectionSpace(const BundleKernelSpec& spec);

  const BundleKernelSpec& spec() const { return spec_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int unknowns() const { return unknowns_; }
  int equations() const { return equations_; }
  SkewSection element(std::span<const Coeff> coords) const;
  SkewSection basis_element(int i) const;

 private:
  BundleKernelSpec spec_;
  std::vector<int> offset_;
  std::vector<std::vector<Monomial>> monos_;
  int unknowns_ = 0;
  int equations_ = 0;
  std::vector<std::vector<Coeff>> basis_;
};

SkewSection random_section(const SectionSpace& space, std::uint64_t seed);

struct PfaffianLocus {
  Ideal ideal;
  int r = 0;
  int generic_rank = 0;
  std::size_t pfaffians = 0;
  std::size_t independent = 0;
  HilbertPolynomial hp;
};

/// Saturated ideal of the principal 2r-Pfaffians of the section. Throws
/// Errc::wrong_generic_rank when the section does not have rank 2r, and
/// Errc::codimension when the locus is not of codimension 3.
PfaffianLocus pfaffian_locus(const SkewSection& a, const BundleKernelSpec& spec, std::uint64_t seed = 0);

enum class TableRow { dp3, dp4, dp5, dp6, dp7, cy12, cy13, cy14, cy15, cy16 };
std::string to_string(TableRow r);
std::optional<TableRow> table_row_from_string(const std::string& s);
BundleKernelSpec table_row_spec(TableRow row, std::uint64_t seed, const PrimeField& f = PrimeField(kDefaultPrime));
int table_row_degree(TableRow row);

/// dP-side subspace lifted to P7 (generic lift of the graph and of a
/// complement) and extended by two random tensors.
TensorSubspace extend_dp_to_cy(const TensorSubspace& s, std::uint64_t seed);
/// A random 14-dimensional subspace containing the graph span, pushed
/// forward along a random projection P7 -> P6.
TensorSubspace cy_to_dp(const TensorSubspace& s, std::uint64_t seed);

/// Expected fibre count of a builder kind (-1 if not fixed).
int expected_fiber_count(GraphKind kind);

}  // namespace pfaffcy
