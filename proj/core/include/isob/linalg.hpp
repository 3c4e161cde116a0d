#pragma once

#include <optional>
#include <vector>

#include "isob/numeric.hpp"

namespace isob {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix to_rational(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Row vector times matrix.
RationalVector row_times(const RationalVector& row, const RationalMatrix& m);

RationalVector times_column(const RationalMatrix& m, const RationalVector& col);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m);

}  // namespace isob
