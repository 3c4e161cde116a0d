#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isob/numeric.hpp"

namespace isob {

enum class GroupType { Type1, Type2 };

std::string to_string(GroupType t);

/// Rows of the classification table of simple groups.
enum class GroupFamily {
  // Type 1
  SU, SP_R, SO, SP, SO_STAR, G2_2, F4_4, F4_M20, E6_6, E6_2, E6_M14, E7_7, E7_M5, E7_M25, E8_8,
  // Type 2
  SL_R, SO_N1, SU_STAR, E6_M26, SL_C, SO_C, SP_C, G2_C, F4_C, E6_C, E7_C, E8_C,
};

/// Family plus its integer parameters, in the table's notation:
/// SU(p,q) {p,q}; SP(2n,R) {n}; SO(p,q) {p,q}; SP(p,q) {p,q}; SO*(2n) {n};
/// SL(n,R) {n}; SO(n,1) {n}; SU*(2n) {n}; SL(n,C) {n}; SO(n,C) {n};
/// SP(2n,C) {n}; no parameters for the exceptional rows.
struct GroupDescriptor {
  GroupFamily family = GroupFamily::SU;
  std::vector<int> params;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Accepts "SU(3,2)", "SP(4,R)", "SO*(6)", "SL(5,R)", "SO(4,1)", "E6(-26)",
/// "E8(C)", ... (case-insensitive, spaces ignored). Throws InvalidArgument.
/// SO(p,1) parses as the SO(n,1) row.
GroupDescriptor parse_group(std::string_view text);
std::string to_string(const GroupDescriptor& g);

struct TypeLookup {
  GroupType type;
  std::vector<std::string> notes;
};

/// Table row lookup. Throws OutOfTable for parameters outside the row's
/// constraints.
TypeLookup classify_group(const GroupDescriptor& g);
GroupType lookup_type(const GroupDescriptor& g);

/// Type1 iff some factor is Type1. Throws EmptyProduct and propagates
/// OutOfTable.
GroupType product_type(const std::vector<GroupDescriptor>& factors);

struct MilnorWoodQuery {
  int k = 1;  // number of hyperbolic surface factors
  Integer euler_tm;
};

/// |eu(TM)| / 2^k. Throws InvalidArgument for k < 1.
Rational milnor_wood_bound(const MilnorWoodQuery& q);

/// |eu(E)| exceeds the bound, so E admits no flat structure.
bool obstructs_flat(const MilnorWoodQuery& q, const Integer& euler_e);

/// pi^k / (2^k (2k-1)!! v_2k). For k = 1 the volume defaults to pi; for k >= 2
/// it must be supplied. Throws NonPositiveVolume and InvalidArgument.
double smillie_ratio(int k, std::optional<double> v2k = std::nullopt);

}  // namespace isob
