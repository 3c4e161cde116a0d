#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "isob/numeric.hpp"

namespace isob {

enum class Basis { Ambient, Fundamental };

std::string to_string(Basis basis);

/// Exact coordinate vector in either the ambient Euclidean realization of a
/// root system or in fundamental-weight coordinates. A weight carries no
/// reference to its root system; consumers validate the length.
struct Weight {
  Basis basis = Basis::Ambient;
  std::vector<Rational> coords;

  Weight() = default;
  Weight(Basis b, std::vector<Rational> c) : basis(b), coords(std::move(c)) {}

  static Weight ambient(std::initializer_list<long> values);
  static Weight fundamental(std::initializer_list<long> values);
  static Weight from_ints(Basis b, const IntVec& values);
  static Weight zero(Basis b, std::size_t size);

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  bool is_integral() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w) { return w *= s; }
  friend Weight operator-(Weight w) { return w *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  /// Canonical total order: basis, then lexicographic on coordinates.
  friend bool operator<(const Weight& a, const Weight& b);
};

/// "(2, 0, 1/2)"
std::string to_string(const Weight& w);

/// Finite multiset of weights with strictly positive multiplicities,
/// iterated in the canonical weight order.
class WeightMultiset {
 public:
  using Map = std::map<Weight, std::uint64_t>;

  WeightMultiset() = default;

  void add(const Weight& w, std::uint64_t multiplicity = 1);
  void add(const WeightMultiset& other);

  std::uint64_t multiplicity(const Weight& w) const;
  /// Sum of multiplicities.
  std::uint64_t total() const;
  /// Number of distinct weights.
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }
  const Map& entries() const { return entries_; }

  /// w in S iff -w in S, with equal multiplicity.
  bool is_negation_closed() const;
  /// Sum of all weights counted with multiplicity. Requires a nonempty set.
  Weight weighted_sum() const;

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const WeightMultiset& a, const WeightMultiset& b) {
    return !(a == b);
  }

 private:
  Map entries_;
};

std::string to_string(const WeightMultiset& set);

}  // namespace isob
