#pragma once

#include <cstdint>
#include <vector>

#include "isob/config.hpp"
#include "isob/root_system.hpp"
#include "isob/weight.hpp"

namespace isob {

/// Irreducible representation V_lambda, lambda dominant and integral.
class HighestWeightRep {
 public:
  /// Throws BasisMismatch, NotIntegral or NotDominant.
  HighestWeightRep(RootSystem rs, Weight highest_weight);

  const RootSystem& root_system() const { return rs_; }
  const Weight& highest_weight() const { return highest_; }
  /// Highest weight in fundamental coordinates.
  const IntVec& labels() const { return labels_; }

 private:
  RootSystem rs_;
  Weight highest_;
  IntVec labels_;
};

/// <w, alpha_i^vee> >= 0 for every simple coroot. Throws BasisMismatch and
/// NotIntegral.
bool is_dominant(const RootSystem& rs, const Weight& w);

/// The dominant weight in the Weyl orbit of w, in w's basis.
Weight to_dominant(const RootSystem& rs, const Weight& w);

/// lambda - mu is a nonnegative integer combination of simple roots.
bool dominates(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// Weyl dimension formula, evaluated over the positive coroots.
Integer weyl_dim(const HighestWeightRep& rep);
Integer weyl_dim(const RootSystem& rs, const Weight& highest_weight);

struct SmallestRep {
  Integer dim;
  Weight witness;  // fundamental weight, ambient coordinates
  int index = 0;   // 0-based index of the fundamental weight
};

/// Minimum of weyl_dim over the fundamental weights; the lowest index wins
/// ties. Throws IllegalType for a system without roots.
SmallestRep smallest_nontrivial_dim(const RootSystem& rs);

/// Full orbit, sorted in the canonical weight order, in w's basis.
/// Throws OrbitTooLarge when the orbit is bigger than `cap`.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w,
                               std::uint64_t cap = Limits{}.orbit_cap);

/// |W| / |Stab(w)|. Multinomial on ambient coordinates for A-type, parabolic
/// subgroup order of the dominant representative otherwise.
Integer orbit_size(const RootSystem& rs, const Weight& w);

/// nu(lambda) = -w0(lambda). Throws NotDominant.
Weight weyl_involution(const RootSystem& rs, const Weight& lambda);

/// Weight multiset of V_lambda by Freudenthal's recursion, in the basis of the
/// highest weight. Throws CapExceeded once the running dimension passes `cap`.
WeightMultiset freudenthal_multiplicities(const HighestWeightRep& rep,
                                          std::uint64_t cap = Limits{}.freudenthal_cap);

}  // namespace isob
