#pragma once

#include <json.hpp>

#include "isob/charclass.hpp"
#include "isob/classify.hpp"
#include "isob/obstruction.hpp"
#include "isob/root_system.hpp"
#include "isob/sympair.hpp"
#include "isob/weight.hpp"

namespace isob::cli {

using Json = nlohmann::ordered_json;

// Exact numbers are written as strings so that big integers and fractions
// survive any JSON reader.

Json to_json(const Weight& w);
Json to_json(const WeightMultiset& set);
Json to_json(const RootSystem& rs);
Json to_json(const SymmetricPair& pair);
Json to_json(const ObstructionReport& report);
/// One object per degree, monomial exponents "2,0,1" mapped to coefficients.
Json to_json(const ChernPolynomial& c);
Json to_json(const FlatKernelDescription& k);

}  // namespace isob::cli
