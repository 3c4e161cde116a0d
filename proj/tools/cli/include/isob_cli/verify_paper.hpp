#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isob/config.hpp"
#include "isob/sympair.hpp"

namespace isob::cli {

struct VerifyItem {
  std::string group;  // "table", "pairs", "complex", ...
  std::string item;
  bool pass = false;
  std::string detail;
};

/// "sl-so:2..9", "sl-sp:3", "e6-f4", or a comma-separated list of those.
std::vector<PairId> parse_pair_selection(std::string_view text);

/// Dimension and smallest-representation rows for the complex simple algebras.
std::vector<VerifyItem> verify_table();
/// Obstruction checks, with the expected certificate numbers per family.
std::vector<VerifyItem> verify_pairs(const std::vector<PairId>& pairs, const Limits& limits);
/// d^2 > dim g for a sample of every row of the complex table.
std::vector<VerifyItem> verify_complex_rows();
/// Freudenthal against Weyl, orbit_size against the enumerated orbit.
std::vector<VerifyItem> verify_oracles(const Limits& limits);
std::vector<VerifyItem> verify_isotropy();
std::vector<VerifyItem> verify_chern();
std::vector<VerifyItem> verify_bounds();
std::vector<VerifyItem> verify_classify_sample();

/// Every group above, with the default pair batch.
std::vector<VerifyItem> verify_all(const Limits& limits);
std::vector<PairId> default_pair_batch();

}  // namespace isob::cli
