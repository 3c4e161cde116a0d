#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isob/linalg.hpp"
#include "isob/root_system.hpp"
#include "isob/weight.hpp"

namespace isob {

enum class PairKind { SL_SO, SL_SP, SO_SO, E6_F4, Complex };

struct PairId {
  PairKind kind = PairKind::SL_SO;
  int n = 0;                 // SL_SO, SL_SP, SO_SO
  SimpleType complex_type{};  // Complex

  friend bool operator==(const PairId&, const PairId&) = default;
};

/// "sl-so:5", "sl-sp:3", "so-so:9", "e6-f4", "complex:E8". Throws
/// InvalidArgument when unparsable; ranges are checked by make_pair.
PairId parse_pair_id(std::string_view text);
std::string to_string(const PairId& id);

/// (g, k) with k the fixed algebra of the involution and p its complement.
///
/// For SL_SO and SL_SP, g is sl_N (A-type, quotient coordinates) and k is
/// so_n or sp_2n in the L' basis. Complex(T) stands for g_T + g_T with k the
/// diagonal copy; `g` and `k` both hold the root system of T. SO_SO and E6_F4
/// have no restriction map.
struct SymmetricPair {
  PairId id;
  RootSystem g;
  RootSystem k;
  std::optional<RationalMatrix> restriction;  // rows: k ambient, cols: g ambient
  Integer dim_p;
  std::optional<Weight> isotropy_highest;     // k ambient
  std::vector<std::string> notes;
};

/// Throws IllegalParameter for out-of-range n and IllegalType for an illegal
/// complex type.
SymmetricPair make_pair(const PairId& id);

/// Image of a g weight under r. Complex pairs take a weight of g + g, i.e. an
/// ambient vector of twice the ambient dimension. Throws NoRestrictionMap.
Weight restrict(const SymmetricPair& pair, const Weight& w);

/// Weights of the complexified isotropy representation, in the L' basis.
/// Throws NoWeightModel for SO_SO and E6_F4.
WeightMultiset isotropy_weights(const SymmetricPair& pair);

/// 2L'_1 for SL_SO, L'_1 + L'_2 for SL_SP, the highest root for Complex.
Weight isotropy_highest_weight(const SymmetricPair& pair);

}  // namespace isob
