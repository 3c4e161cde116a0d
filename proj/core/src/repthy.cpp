#include "isob/repthy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "isob/errors.hpp"

namespace isob {

namespace {

IntVec reflect_ints(const RootSystem& rs, IntVec a, std::size_t i) {
  const auto& row = rs.cartan_matrix()[i];
  const auto c = a[i];
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = checked_add(a[j], -checked_mul(c, row[j]));
  return a;
}

IntVec dominant_ints(const RootSystem& rs, IntVec a) {
  while (true) {
    const auto it = std::find_if(a.begin(), a.end(), [](auto x) { return x < 0; });
    if (it == a.end()) return a;
    a = reflect_ints(rs, std::move(a), static_cast<std::size_t>(it - a.begin()));
  }
}

Weight from_labels(const RootSystem& rs, const IntVec& a, Basis basis) {
  Weight w = Weight::from_ints(Basis::Fundamental, a);
  return basis == Basis::Fundamental ? w : rs.to_ambient(w);
}

bool nonneg_root_combination(const RootSystem& rs, const IntVec& diff) {
  RationalVector d;
  for (auto x : diff) d.emplace_back(static_cast<long>(x));
  for (const auto& c : row_times(d, rs.inverse_cartan()))
    if (c < 0 || !is_integer(c)) return false;
  return true;
}

}  // namespace

bool is_dominant(const RootSystem& rs, const Weight& w) {
  const auto a = rs.fundamental_ints(w);
  return std::all_of(a.begin(), a.end(), [](auto x) { return x >= 0; });
}

Weight to_dominant(const RootSystem& rs, const Weight& w) {
  return from_labels(rs, dominant_ints(rs, rs.fundamental_ints(w)), w.basis);
}

bool dominates(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const auto l = rs.fundamental_ints(lambda), m = rs.fundamental_ints(mu);
  IntVec diff(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) diff[i] = checked_add(l[i], -m[i]);
  return nonneg_root_combination(rs, diff);
}

HighestWeightRep::HighestWeightRep(RootSystem rs, Weight highest_weight)
    : rs_(std::move(rs)), highest_(std::move(highest_weight)) {
  labels_ = rs_.fundamental_ints(highest_);
  if (std::any_of(labels_.begin(), labels_.end(), [](auto x) { return x < 0; }))
    throw Error(ErrorKind::NotDominant,
                "weight " + to_string(highest_) + " is not dominant for " + rs_.label());
}

Integer weyl_dim(const HighestWeightRep& rep) {
  const auto& a = rep.labels();
  Integer num = 1, den = 1;
  for (const auto& d : rep.root_system().positive_coroots_simple()) {
    Integer top = 0, bottom = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      top += Integer(static_cast<long>(d[k])) * Integer(static_cast<long>(a[k] + 1));
      bottom += static_cast<long>(d[k]);
    }
    num *= top;
    den *= bottom;
  }
  if (num % den != 0) throw Error(ErrorKind::ConsistencyFault, "Weyl dimension is not integral");
  return num / den;
}

Integer weyl_dim(const RootSystem& rs, const Weight& highest_weight) {
  return weyl_dim(HighestWeightRep(rs, highest_weight));
}

SmallestRep smallest_nontrivial_dim(const RootSystem& rs) {
  if (rs.rank() == 0) throw Error(ErrorKind::IllegalType, rs.label() + " has no roots");
  SmallestRep best;
  for (int i = 0; i < rs.rank(); ++i) {
    const Weight& w = rs.fundamental_weights()[static_cast<std::size_t>(i)];
    Integer d = weyl_dim(rs, w);
    if (i == 0 || d < best.dim) best = {d, w, i};
  }
  return best;
}

Integer orbit_size(const RootSystem& rs, const Weight& w) {
  rs.check(w);
  if (rs.rank() == 0) return 1;
  if (rs.uses_quotient()) {
    const Weight amb = rs.to_ambient(w);
    std::map<Rational, unsigned long> counts;
    for (const auto& c : amb.coords) ++counts[c];
    Integer out = factorial(amb.size());
    for (const auto& [value, count] : counts) out /= factorial(count);
    return out;
  }
  const auto dom = dominant_ints(rs, rs.fundamental_ints(w));
  std::vector<int> zero_nodes;
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i] == 0) zero_nodes.push_back(static_cast<int>(i));
  return rs.weyl_group_order() / parabolic_order(rs, zero_nodes);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w, std::uint64_t cap) {
  const Integer expected = orbit_size(rs, w);
  if (expected > Integer(static_cast<unsigned long>(cap)))
    throw Error(ErrorKind::OrbitTooLarge, "orbit of " + to_string(w) + " has " + to_string(expected) +
                                              " elements, above the cap " + std::to_string(cap));
  // Walk down from the dominant weight; only reflections with a positive
  // label move a weight further from the dominant chamber.
  const IntVec start = dominant_ints(rs, rs.fundamental_ints(w));
  std::set<IntVec> seen{start};
  std::vector<IntVec> frontier{start};
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& a : frontier)
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) continue;
        IntVec b = reflect_ints(rs, a, i);
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const auto& a : seen) out.push_back(from_labels(rs, a, w.basis));
  std::sort(out.begin(), out.end());
  return out;
}

Weight weyl_involution(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda))
    throw Error(ErrorKind::NotDominant, "weight " + to_string(lambda) + " is not dominant");
  IntVec neg = rs.fundamental_ints(lambda);
  for (auto& x : neg) x = -x;
  return from_labels(rs, dominant_ints(rs, std::move(neg)), lambda.basis);
}

WeightMultiset freudenthal_multiplicities(const HighestWeightRep& rep, std::uint64_t cap) {
  const RootSystem& rs = rep.root_system();
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  const IntVec& lambda = rep.labels();

  // Integer multiple of the Gram matrix of the fundamental weights.
  Integer scale = 1;
  for (const auto& row : rs.fundamental_gram())
    for (const auto& g : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), g.get_den().get_mpz_t());
  IntMatrix gram(r, IntVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = to_int64(rs.fundamental_gram()[i][j] * scale);
  auto form = [&](const IntVec& x, const IntVec& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) s = checked_add(s, checked_mul(checked_mul(x[i], gram[i][j]), y[j]));
    }
    return s;
  };
  auto plus = [](IntVec x, const IntVec& y, std::int64_t k = 1) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = checked_add(x[i], checked_mul(k, y[i]));
    return x;
  };

  const IntVec rho(r, 1);
  const IntVec lambda_rho = plus(lambda, rho);
  const std::int64_t top = form(lambda_rho, lambda_rho);
  const auto& positive = rs.positive_roots_fundamental();
  const auto& cartan = rs.cartan_matrix();

  std::map<IntVec, std::int64_t> mult{{lambda, 1}};
  std::uint64_t total = 1;
  std::set<IntVec> level{lambda};
  while (!level.empty()) {
    std::set<IntVec> next;
    for (const auto& mu : level)
      for (std::size_t i = 0; i < r; ++i) {
        IntVec nu = plus(mu, cartan[i], -1);
        if (mult.count(nu) || next.count(nu)) continue;
        IntVec diff = plus(lambda, dominant_ints(rs, nu), -1);
        if (nonneg_root_combination(rs, diff)) next.insert(std::move(nu));
      }
    for (const auto& mu : next) {
      std::int64_t sum = 0;
      for (const auto& alpha : positive) {
        IntVec shifted = plus(mu, alpha);
        for (auto it = mult.find(shifted); it != mult.end(); it = mult.find(shifted)) {
          sum = checked_add(sum, checked_mul(it->second, form(shifted, alpha)));
          shifted = plus(std::move(shifted), alpha);
        }
      }
      const IntVec mu_rho = plus(mu, rho);
      const std::int64_t gap = top - form(mu_rho, mu_rho);
      if (gap <= 0 || (2 * sum) % gap != 0)
        throw Error(ErrorKind::ConsistencyFault, "Freudenthal recursion produced a non-integer");
      const std::int64_t m = 2 * sum / gap;
      if (m <= 0) throw Error(ErrorKind::ConsistencyFault, "Freudenthal recursion produced a zero multiplicity");
      mult.emplace(mu, m);
      total += static_cast<std::uint64_t>(m);
      if (total > cap)
        throw Error(ErrorKind::CapExceeded, "representation dimension exceeds the cap " + std::to_string(cap));
    }
    level = std::move(next);
  }

  WeightMultiset out;
  const Basis basis = rep.highest_weight().basis;
  for (const auto& [mu, m] : mult) out.add(from_labels(rs, mu, basis), static_cast<std::uint64_t>(m));
  return out;
}

}  // namespace isob
