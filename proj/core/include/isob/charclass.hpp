#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isob/numeric.hpp"
#include "isob/root_system.hpp"
#include "isob/weight.hpp"

namespace isob {

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order, leading term first: higher total degree
/// first, then lexicographically larger exponent vectors.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in x_1..x_m with exact rational coefficients. Zero terms are
/// never stored, so equality is structural.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}
  static Polynomial constant(std::size_t variables, const Rational& c);
  /// w_1 x_1 + ... + w_m x_m.
  static Polynomial linear(const Weight& w);

  std::size_t variables() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  std::size_t vars_;
  Terms terms_;
};

/// "-x1^2 + 3x1x2 - 1/2"; "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

/// Total Chern class prod (1 + w_i) split by degree: pieces[d] is the d-th
/// elementary symmetric polynomial of the weights, d = 0..N.
struct ChernPolynomial {
  std::size_t variables = 0;
  std::vector<Polynomial> pieces;

  friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;
};

/// Each weight is read as a linear form in the torus generators. The empty
/// multiset gives c = 1 in zero variables.
ChernPolynomial chern_polynomial(const WeightMultiset& weights);

/// Compares Chern polynomials, and cross-checks the answer against multiset
/// equality (ConsistencyFault if they disagree). Throws BasisMismatch for
/// weights over different spaces and CountMismatch for different totals.
bool reps_equal_by_chern(const WeightMultiset& a, const WeightMultiset& b);

/// Negation-closed; when true, also checks that every odd piece of the Chern
/// polynomial vanishes (ConsistencyFault otherwise).
bool complexification_vanishing(const WeightMultiset& weights);

/// The multiset is permuted by every simple reflection of rs.
bool is_weyl_invariant(const RootSystem& rs, const WeightMultiset& weights);

struct CharacteristicClass {
  std::string name;  // "p_1", "e", "e^2"
  int degree = 0;

  friend bool operator==(const CharacteristicClass&, const CharacteristicClass&) = default;
};

/// Classes of an R^n bundle that vanish on flat bundles: the ideal generated
/// by the Pontryagin classes.
struct FlatKernelDescription {
  int n = 0;
  std::vector<CharacteristicClass> kernel_generators;
  std::optional<CharacteristicClass> euler;         // n even, not in the kernel
  std::optional<CharacteristicClass> euler_square;  // e^2 = p_{n/2}, in the kernel
  std::vector<std::string> notes;
};

/// Throws InvalidArgument for n < 1.
FlatKernelDescription flat_kernel(int n);

}  // namespace isob
