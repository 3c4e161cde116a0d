#include "isob/linalg.hpp"

#include <utility>

namespace isob {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].emplace_back(static_cast<long>(v));
  return out;
}

std::vector<std::size_t> reduce_row_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = reduce_row_echelon(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

std::size_t rank(RationalMatrix m) { return reduce_row_echelon(m).size(); }

RationalVector row_times(const RationalVector& row, const RationalMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  RationalVector out(cols, Rational(0));
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += row[i] * m[i][j];
  }
  return out;
}

RationalVector times_column(const RationalMatrix& m, const RationalVector& col) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < col.size(); ++j) out[i] += m[i][j] * col[j];
  return out;
}

}  // namespace isob
