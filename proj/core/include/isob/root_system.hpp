#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isob/linalg.hpp"
#include "isob/numeric.hpp"
#include "isob/weight.hpp"

namespace isob {

enum class Family { A, B, C, D, E, F, G };

char to_char(Family f);

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8}, F4, G2.
  bool is_legal() const;
  /// "E8", "A4".
  std::string name() const;
  /// Classical name of the complex Lie algebra: "sl_5", "so_7", "sp_6", "e_8".
  std::string algebra_name() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Accepts "E8", "e8", "E 8". Throws InvalidArgument when unparsable and
/// IllegalType when the pair is not a legal simple type.
SimpleType parse_simple_type(std::string_view text);
SimpleType make_simple_type(std::string_view family, int rank);

/// Product formula for the order of the Weyl group; defined for the legal
/// types and for the degenerate orthogonal cases B1, D1, D2.
Integer weyl_group_order(const SimpleType& type);

/// Root system in an explicit ambient realization (Bourbaki conventions).
///
/// A_n lives in R^{n+1} modulo (1,...,1); every ambient weight of an A-type
/// system is stored with its last coordinate set to 0, and inner products are
/// taken on the sum-zero projection so they are well defined on the quotient.
/// B_n, C_n, D_n live in R^n, E6/E7/E8 in the span of their simple roots inside
/// R^8, F4 in R^4 and G2 in the sum-zero plane of R^3.
///
/// Instances are immutable and share their data, so copies are cheap and safe
/// to read from several threads.
class RootSystem {
 public:
  const SimpleType& type() const;
  /// Number of simple roots.
  int rank() const;
  /// Dimension of the Cartan subalgebra. Equals rank() except for so_2.
  int torus_rank() const;
  int ambient_dim() const;
  /// True for A-type systems (quotient coordinates).
  bool uses_quotient() const;
  /// "sl_5", "so_3", ...
  const std::string& label() const;

  std::span<const Weight> simple_roots() const;
  /// Ordered by height, then by simple-root coefficients.
  std::span<const Weight> positive_roots() const;
  std::span<const Weight> fundamental_weights() const;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>.
  const IntMatrix& cartan_matrix() const;
  const Weight& weyl_vector() const;
  const Integer& weyl_group_order() const;
  /// Highest root; throws IllegalType for a system without roots.
  const Weight& highest_root() const;

  /// Positive roots in fundamental coordinates, aligned with positive_roots().
  const std::vector<IntVec>& positive_roots_fundamental() const;
  /// Simple-root coefficients of each positive root.
  const std::vector<IntVec>& positive_roots_simple() const;
  /// Coefficients of each positive coroot over the simple coroots.
  const std::vector<IntVec>& positive_coroots_simple() const;
  /// Gram matrix <varpi_i, varpi_j> of the fundamental weights.
  const RationalMatrix& fundamental_gram() const;
  const RationalMatrix& inverse_cartan() const;

  /// Throws BasisMismatch unless the weight has the length its basis needs.
  void check(const Weight& w) const;

  /// Ambient inner product (projected to the sum-zero hyperplane for A-type).
  Rational inner(const Weight& x, const Weight& y) const;
  /// <w, alpha^vee> for a root alpha, both ambient.
  Rational coroot_pairing(const Weight& w, const Weight& root) const;

  /// Representative with last coordinate 0 for A-type; identity otherwise.
  Weight canonical(Weight w) const;
  Weight to_fundamental(const Weight& w) const;
  Weight to_ambient(const Weight& w) const;
  Weight in_basis(const Weight& w, Basis basis) const;
  /// Fundamental coordinates as integers; throws NotIntegral.
  IntVec fundamental_ints(const Weight& w) const;

  /// Simple reflection s_i, in the weight's own basis.
  Weight reflect(const Weight& w, int i) const;

  /// Coefficients over the simple roots of a weight (ambient or fundamental).
  RationalVector simple_root_coefficients(const Weight& w) const;

 private:
  struct Data;
  explicit RootSystem(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend struct RootSystemBuilder;
};

/// Throws Error(IllegalType) for illegal (family, rank).
RootSystem build_root_system(const SimpleType& type);

/// Root system of so_m for m >= 2, in its standard B/D realization. Unlike
/// build_root_system this also produces the degenerate so_2 (a torus, no roots),
/// so_3 (B1) and so_4 (D2, not simple), which occur as subalgebras of small
/// symmetric pairs.
RootSystem build_orthogonal(int m);

/// Dimension of the Lie algebra: 2 |positive roots| + torus rank.
Integer algebra_dim(const RootSystem& rs);

/// Identifies the type of a connected Cartan matrix by its Dynkin diagram.
/// Throws InvalidArgument if the diagram is not connected or not of finite type.
SimpleType classify_cartan(const IntMatrix& cartan);

/// Splits the Dynkin diagram induced on `nodes` into connected components.
std::vector<std::vector<int>> dynkin_components(const IntMatrix& cartan,
                                                const std::vector<int>& nodes);

/// Order of the parabolic subgroup generated by the simple reflections in `nodes`.
Integer parabolic_order(const RootSystem& rs, const std::vector<int>& nodes);

}  // namespace isob
